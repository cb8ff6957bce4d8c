#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace tslasso {

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Derives an independent stream seed from a master seed and a path of
// stream identifiers (design, sample size, replication, ...).
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

// Portable Gaussian source: std::mt19937_64 (output fully specified by the
// standard) feeding 53-bit uniforms into the Marsaglia polar method. The
// standard library's distributions are implementation-defined, so they are
// not used anywhere in the simulators.
class NormalSource {
public:
    explicit NormalSource(std::uint64_t seed) : engine_(seed) {}
    virtual ~NormalSource() = default;

    // Uniform on the open interval (0, 1).
    double uniform();
    virtual double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Emits zeros; drives simulators through their deterministic skeleton.
class ZeroSource final : public NormalSource {
public:
    ZeroSource() : NormalSource(0) {}
    double normal() override { return 0.0; }
};

}  // namespace tslasso
