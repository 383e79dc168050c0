#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sd {

/// Thrown when input data violates a constructor precondition or a file is
/// malformed. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// One violated axiom with the witnessing indices.
struct Violation {
    std::string rule;        // e.g. "associativity", "family-axiom-2"
    std::vector<int> where;  // witness tuple, meaning depends on rule
    std::string note;

    std::string describe() const;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string rule, std::vector<int> where, std::string note = "") {
        violations.push_back({std::move(rule), std::move(where), std::move(note)});
    }
};

/// Deterministic 64-bit generator (splitmix64). Used everywhere randomness is
/// needed so that reports are byte-identical for a fixed seed, independent of
/// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 bits of entropy.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    /// Derive an independent stream for sample index i (keeps parallel and
    /// serial runs identical).
    Rng derived(std::uint64_t i) const {
        Rng r(state_ ^ (0xd1342543de82ef95ULL * (i + 1)));
        r.next_u64();
        return r;
    }

private:
    std::uint64_t state_;
};

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace sd
