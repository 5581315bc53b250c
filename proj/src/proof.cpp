#include <pentagon/proof.hpp>

#include <stdexcept>
#include <string>

namespace pentagon {

ProofState proof_initial()
{
    // P = 1 - x - x^2 R_1 after the lemma.
    return ProofState{1, {PentTerm::at(0), PentTerm::at(1)}, -1, 2};
}

void validate(const ProofState& s)
{
    if (s.k == 0 || s.k > static_cast<std::uint64_t>(kMaxIndex) / 2) {
        throw std::invalid_argument("proof state: stage out of range");
    }
    const auto k = static_cast<std::int64_t>(s.k);
    if (s.head.size() != 2 * s.k) {
        throw std::invalid_argument("proof state: head must hold 2k terms");
    }
    for (std::size_t t = 0; t < s.head.size(); ++t) {
        if (s.head[t] != PentTerm::at(index_of_position(t))) {
            throw std::invalid_argument("proof state: head term " + std::to_string(t) + " is wrong");
        }
    }
    if (s.remainder_sign != pent_sign(k) || s.remainder_shift != gpent(k) + s.k) {
        throw std::invalid_argument("proof state: remainder scale does not match stage");
    }
}

ProofState proof_step(const ProofState& s)
{
    validate(s);
    const auto k = s.k;
    // (-1)^k x^e R_k = (-1)^k x^e - (-1)^k x^{e+2k+1} - (-1)^k x^{e+3k+2} R_{k+1}
    const std::uint64_t e = s.remainder_shift;
    const std::uint64_t first = e;
    const std::uint64_t second = e + 2 * k + 1;
    const std::uint64_t next_shift = e + 3 * k + 2;

    const auto ki = static_cast<std::int64_t>(k);
    if (first != gpent(-ki) || second != gpent(ki + 1) || next_shift != gpent(ki + 1) + k + 1) {
        throw std::logic_error("proof step: recombined exponents disagree with pentagonal numbers at k = " +
                               std::to_string(k));
    }
    ProofState next = s;
    next.k = k + 1;
    next.head.push_back(PentTerm{-ki, first, s.remainder_sign});
    next.head.push_back(PentTerm{ki + 1, second, -s.remainder_sign});
    next.remainder_sign = -s.remainder_sign;
    next.remainder_shift = next_shift;
    return next;
}

IntSeries proof_remainder(std::uint64_t k, std::size_t n)
{
    if (k == 0) {
        throw std::invalid_argument("proof_remainder: k must be positive");
    }
    IntSeries r(n);
    auto running = IntSeries::one(n);
    if (k <= n) {
        running.multiply_one_minus(k);
    }
    for (std::uint64_t j = 0; j * k <= n; ++j) {
        const std::size_t shift = j * k;
        for (std::size_t i = 0; i + shift <= n; ++i) {
            r[i + shift] += running[i];
        }
        const std::uint64_t next = k + j + 1;
        if (next <= n) {
            running.multiply_one_minus(next);
        }
    }
    return r;
}

IntSeries proof_materialize(const ProofState& s, std::size_t n)
{
    IntSeries out(n);
    for (const auto& t : s.head) {
        if (t.exponent <= n) {
            out[t.exponent] += t.sign;
        }
    }
    if (s.remainder_shift <= n) {
        const auto rem = proof_remainder(s.k, n - s.remainder_shift);
        for (std::size_t i = 0; i <= rem.order(); ++i) {
            if (s.remainder_sign > 0) {
                out[i + s.remainder_shift] += rem[i];
            } else {
                out[i + s.remainder_shift] -= rem[i];
            }
        }
    }
    return out;
}

std::vector<PentTerm> certified_prefix(const ProofState& s)
{
    auto out = s.head;
    out.push_back(PentTerm{-static_cast<std::int64_t>(s.k), s.remainder_shift, s.remainder_sign});
    return out;
}

IdentityReport check_step_identity(std::uint64_t k, std::size_t n)
{
    const auto lhs = proof_remainder(k, n);
    auto rhs = IntSeries::one(n);
    if (2 * k + 1 <= n) {
        rhs[2 * k + 1] -= 1;
    }
    const std::uint64_t shift = 3 * k + 2;
    if (shift <= n) {
        const auto next = proof_remainder(k + 1, n - shift);
        for (std::size_t i = 0; i <= next.order(); ++i) {
            rhs[i + shift] -= next[i];
        }
    }
    return compare_series("proof-step", {static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)}, lhs, rhs);
}

IdentityReport check_proof(std::size_t n, std::size_t steps)
{
    const std::vector<std::int64_t> box{static_cast<std::int64_t>(n), static_cast<std::int64_t>(steps)};
    IdentityReport report{"proof", box, true, std::nullopt};
    const auto target = euler_product(n);
    const auto pent = pentagonal_series(n);
    auto state = proof_initial();
    for (std::size_t step = 0;; ++step) {
        auto materialized = compare_series("proof", box, proof_materialize(state, n), target);
        if (materialized.discrepancy) {
            materialized.discrepancy->exponent.push_back(static_cast<std::int64_t>(state.k));
        }
        merge_into(report, materialized);
        for (const auto& t : certified_prefix(state)) {
            if (t.exponent <= n && pent[t.exponent] != t.sign) {
                merge_into(report, IdentityReport{"proof", box, false,
                                                  Discrepancy{{static_cast<std::int64_t>(t.exponent),
                                                               static_cast<std::int64_t>(state.k)},
                                                              std::to_string(t.sign), pent[t.exponent].get_str()}});
            }
        }
        auto step_ok = check_step_identity(state.k, n);
        step_ok.identity = "proof";
        step_ok.box = box;
        merge_into(report, step_ok);
        if (!report.verified || step == steps) {
            break;
        }
        state = proof_step(state);
    }
    return report;
}

} // namespace pentagon
