#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "pslab/groebner.hpp"

namespace pslab {

/// Content-addressed store of reduced Groebner bases. Keys are SHA-256 of
/// (ring signature, order descriptor, canonicalized generators); files are
/// written atomically (temp file + rename), so concurrent writers of the
/// same key are harmless. Results are bitwise independent of hit/miss.
class GbCache {
public:
    explicit GbCache(std::string directory);

    const std::string& directory() const { return dir_; }

    std::shared_ptr<const ReducedGB> get_or_compute(const std::vector<Poly>& generators,
                                                    const MonomialOrder& order,
                                                    const PolyRing& ring,
                                                    const GroebnerLimits& limits);

    /// Statistics for cache-transparency tests.
    size_t hits() const { return hits_; }
    size_t misses() const { return misses_; }

    static std::string cache_key(const std::vector<Poly>& generators, const MonomialOrder& order,
                                 const PolyRing& ring);

private:
    std::string dir_;
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const ReducedGB>> memory_;
    size_t hits_ = 0;
    size_t misses_ = 0;
};

/// Serialization used by the cache files; exposed for tests.
std::string serialize_gb(const ReducedGB& gb, const PolyRing& ring);
ReducedGB deserialize_gb(const std::string& text, const MonomialOrder& expected_order);

} // namespace pslab
