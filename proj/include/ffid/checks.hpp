#pragma once
// Outcome records shared by the verification routines.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffid {

struct Check {
    Check() = default;
    explicit Check(std::string n) : name(std::move(n)) {}
    std::string name;
    bool ok = true;
    std::string witness;  // first failure, or a short note on success
    int instances = 0;
};

inline void fail_once(Check& c, const std::string& w) {
    if (c.ok) c.witness = w;
    c.ok = false;
}

inline bool all_ok(const std::vector<Check>& cs) {
    for (auto& c : cs)
        if (!c.ok) return false;
    return true;
}

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// throws VerificationFailure naming the first failed check
inline void require_all(const std::vector<Check>& cs) {
    for (auto& c : cs)
        if (!c.ok) throw VerificationFailure(c.name + ": " + c.witness);
}

// Delta-matrix calculus: lemma suite over F_q for matrices of size d,
// `instances` random cases per randomized identity.
std::vector<Check> delta_lemma_suite(int q, int d, int instances, std::uint64_t seed);

}  // namespace ffid
