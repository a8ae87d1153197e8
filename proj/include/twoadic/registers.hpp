#pragma once

#include "twoadic/bigint.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twoadic {

/// Feedback-with-carry shift register with connection number q.
///
/// q is odd with q = sum_{i=1}^{r} q_i 2^i - 1, q_r = 1, i.e. the taps
/// q_1..q_r are the bits of q+1. The register stores r bits with index 0
/// holding the oldest bit (the next one to be emitted); the memory is an
/// unbounded signed integer.
///
/// One step:
///   sigma = sum of taps against the register + memory,
///   emit the rightmost bit,
///   feed sigma mod 2 in on the left,
///   keep (sigma - sigma mod 2)/2 as the new memory.
///
/// The tap/register pairing is fixed so that the output stream of a state
/// built from a fraction num/den is exactly the 2-adic expansion of num/den;
/// that identity, not the register picture, is the contract.
class FcsrState {
public:
    FcsrState(Int q, std::vector<std::uint8_t> reg, Int memory)
        : q_(std::move(q)), reg_(std::move(reg)), mem_(std::move(memory)) {
        if (q_ < 3 || (q_ & 1) == 0)
            throw std::invalid_argument("FcsrState: connection number must be odd and >= 3");
        const std::size_t r = bit_length(q_ + 1) - 1;  // q+1 has top bit r
        if (reg_.size() != r)
            throw std::invalid_argument("FcsrState: register size must match the stage count");
        for (auto b : reg_)
            if (b > 1) throw std::invalid_argument("FcsrState: register entries must be bits");
        taps_ = q_ + 1;
    }

    const Int& connection_number() const { return q_; }
    std::size_t stage_count() const { return reg_.size(); }
    const std::vector<std::uint8_t>& register_bits() const { return reg_; }
    const Int& memory() const { return mem_; }

    /// Advance one step, returning the emitted bit.
    std::uint8_t step() {
        const std::size_t r = reg_.size();
        Int sigma = mem_;
        // register index i holds the i-th oldest bit and pairs with tap q_{r-i}
        for (std::size_t i = 0; i < r; ++i)
            if (reg_[i] && boost::multiprecision::bit_test(taps_, static_cast<unsigned>(r - i)))
                sigma += 1;
        const std::uint8_t out = reg_[0];
        const std::uint8_t fed = static_cast<std::uint8_t>(mod_floor(sigma, 2).convert_to<unsigned>());
        for (std::size_t i = 0; i + 1 < r; ++i) reg_[i] = reg_[i + 1];
        reg_[r - 1] = fed;
        mem_ = (sigma - fed) / 2;
        return out;
    }

    friend bool operator==(const FcsrState& a, const FcsrState& b) {
        return a.q_ == b.q_ && a.reg_ == b.reg_ && a.mem_ == b.mem_;
    }

private:
    Int q_;
    Int taps_;  // q+1; bit i is tap q_i
    std::vector<std::uint8_t> reg_;
    Int mem_;
};

/// Runs the machine n steps. States are values: the input is left untouched
/// and the advanced state is returned alongside the emitted bits.
inline std::pair<std::vector<std::uint8_t>, FcsrState> fcsr_generate(FcsrState state, std::size_t n) {
    std::vector<std::uint8_t> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(state.step());
    return {std::move(out), std::move(state)};
}

namespace detail {

/// One step of exact 2-adic long division on the numerator: emits the parity
/// bit and replaces num by (num - bit*den)/2. Keeps num within [-den, 0].
inline std::uint8_t adic_expansion_step(Int& num, const Int& den) {
    const std::uint8_t bit = static_cast<std::uint8_t>(mod_floor(num, 2).convert_to<unsigned>());
    if (bit) num -= den;
    num /= 2;
    return bit;
}

}  // namespace detail

/// Builds the FCSR state with connection number den whose output stream is
/// the 2-adic expansion of num/den: the register holds the first r expansion
/// bits and the memory is solved from the machine's fraction identity, then
/// the whole state is verified by replay against continued long division.
inline FcsrState fcsr_init_from_fraction(const Int& num, const Int& den) {
    if (den < 3 || (den & 1) == 0)
        throw std::invalid_argument("fcsr_init_from_fraction: denominator must be odd and >= 3");
    if (num > 0 || num < -den)
        throw std::invalid_argument("fcsr_init_from_fraction: numerator must satisfy -den <= num <= 0");

    const std::size_t r = bit_length(den + 1) - 1;
    const Int taps = den + 1;  // bit i = q_i, q_0 taken as -1 in the identity below

    Int residual = num;
    std::vector<std::uint8_t> bits(r);
    for (std::size_t i = 0; i < r; ++i) bits[i] = detail::adic_expansion_step(residual, den);

    // num = sum_{t=0}^{r-1} 2^t (sum_{k=0}^{t} q_k a_{t-k}) - 2^r m, with q_0 = -1.
    Int acc = 0;
    for (std::size_t t = 0; t < r; ++t) {
        Int coeff = -Int(bits[t]);  // k = 0 term
        for (std::size_t k = 1; k <= t; ++k)
            if (bits[t - k] && boost::multiprecision::bit_test(taps, static_cast<unsigned>(k))) coeff += 1;
        acc += coeff << t;
    }
    Int numerator_mismatch = acc - num;
    if (mod_floor(numerator_mismatch, pow2(r)) != 0)
        throw std::logic_error("fcsr_init_from_fraction: memory value is not integral");
    FcsrState state(den, bits, numerator_mismatch >> r);

    // replay check: the machine must keep following the long division
    Int check = num;
    FcsrState probe = state;
    const std::size_t horizon = r + 64;
    for (std::size_t i = 0; i < horizon; ++i) {
        if (probe.step() != detail::adic_expansion_step(check, den))
            throw std::logic_error("fcsr_init_from_fraction: replay diverged from the 2-adic expansion");
    }
    return state;
}

/// Linear feedback shift register over the prime field F_p with connection
/// coefficients q_1..q_r (q_r != 0). Register index 0 is the oldest cell.
struct LfsrState {
    std::int64_t p = 2;
    std::vector<std::int64_t> coeffs;  // q_1..q_r
    std::vector<std::int64_t> reg;     // r entries, oldest first

    LfsrState(std::int64_t modulus, std::vector<std::int64_t> connection, std::vector<std::int64_t> fill)
        : p(modulus), coeffs(std::move(connection)), reg(std::move(fill)) {
        if (p < 2) throw std::invalid_argument("LfsrState: modulus must be >= 2");
        if (coeffs.empty() || coeffs.back() % p == 0)
            throw std::invalid_argument("LfsrState: q_r must be nonzero");
        if (reg.size() != coeffs.size())
            throw std::invalid_argument("LfsrState: register size must match the coefficient count");
        for (auto& c : coeffs) c = ((c % p) + p) % p;
        for (auto& a : reg) a = ((a % p) + p) % p;
    }

    std::int64_t step() {
        const std::size_t r = reg.size();
        std::int64_t sigma = 0;
        for (std::size_t i = 0; i < r; ++i)  // cell i pairs with tap q_{r-i}
            sigma = (sigma + coeffs[r - i - 1] * reg[i]) % p;
        const std::int64_t out = reg[0];
        for (std::size_t i = 0; i + 1 < r; ++i) reg[i] = reg[i + 1];
        reg[r - 1] = sigma;
        return out;
    }

    friend bool operator==(const LfsrState&, const LfsrState&) = default;
};

inline std::pair<std::vector<std::int64_t>, LfsrState> lfsr_generate(LfsrState state, std::size_t n) {
    std::vector<std::int64_t> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(state.step());
    return {std::move(out), std::move(state)};
}

}  // namespace twoadic
