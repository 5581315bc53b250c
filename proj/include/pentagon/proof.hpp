#pragma once

// Euler's inductive proof of the pentagonal number theorem as a state
// machine. At stage k the product is written as
//
//   P = sum_{n=-k+1}^{k} (-1)^n x^{g_n} + (-1)^k x^{g_k + k} R_k,
//   R_k = sum_{j>=0} (1 - x^k)(1 - x^{k+1})...(1 - x^{k+j}) x^{jk},
//
// and one step expands the factor (1 - x^k), recombines equal powers, and
// arrives at R_k = 1 - x^{2k+1} - x^{3k+2} R_{k+1}.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <pentagon/pentagonal.hpp>
#include <pentagon/report.hpp>
#include <pentagon/series.hpp>

namespace pentagon {

struct ProofState {
    std::uint64_t k = 1;
    /// Terms already emitted, indices -k+1..k, ascending exponent.
    std::vector<PentTerm> head;
    /// (-1)^k.
    int remainder_sign = -1;
    /// g_k + k, the x-power in front of R_k.
    std::uint64_t remainder_shift = 2;

    friend bool operator==(const ProofState&, const ProofState&) = default;
};

ProofState proof_initial();

/// Stage k -> k + 1. Throws std::invalid_argument for an inconsistent state
/// and std::logic_error if the recombined exponents stop matching g_{-k},
/// g_{k+1} (which would falsify the induction).
ProofState proof_step(const ProofState& s);

/// Throws std::invalid_argument unless s is a reachable state.
void validate(const ProofState& s);

/// R_k truncated at x^n.
IntSeries proof_remainder(std::uint64_t k, std::size_t n);

/// Head plus scaled remainder, truncated at x^n.
IntSeries proof_materialize(const ProofState& s, std::size_t n);

/// Head extended by the leading term of the remainder: the 2k + 1 terms
/// that the stage-k state pins down.
std::vector<PentTerm> certified_prefix(const ProofState& s);

/// R_k = 1 - x^{2k+1} - x^{3k+2} R_{k+1} up to x^n.
IdentityReport check_step_identity(std::uint64_t k, std::size_t n);

/// Runs `steps` steps from the initial state; every visited state must
/// materialize to prod (1 - x^m), every step identity must hold, and each
/// head must agree with the pentagonal series prefix.
IdentityReport check_proof(std::size_t n, std::size_t steps);

} // namespace pentagon
