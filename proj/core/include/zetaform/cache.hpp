#pragma once

#include <optional>
#include <string>

#include "zetaform/integral.hpp"

namespace zetaform {

/// Directory used by cached_decompose_integral: the ZETAFORM_CACHE_DIR
/// environment variable, or empty (caching disabled).
std::string cache_directory();

/// Content key of a (params, shift) pair: FNV-1a hash of the canonical JSON.
std::string cache_key(const IntegralParams& p, const ShiftVector& d);

/// decompose_integral with a persistent JSON cache keyed by cache_key. A hit
/// is honored only if the stored parameter echo matches exactly; writes are
/// atomic (temp file + rename). With no cache directory this is a plain call.
LinearForm cached_decompose_integral(const IntegralParams& p, const ShiftVector& d);

/// Cache lookup only (for testing and cache-correctness spot checks).
std::optional<LinearForm> cache_lookup(const IntegralParams& p, const ShiftVector& d);

}  // namespace zetaform
