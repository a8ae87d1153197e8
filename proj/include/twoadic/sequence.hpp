#pragma once

#include "twoadic/bigint.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace twoadic {

/// One period of a binary sequence. Immutable after construction; all
/// operations on it are pure functions.
class BinarySequence {
public:
    explicit BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        if (bits_.empty()) throw std::invalid_argument("BinarySequence: period must be >= 1");
        for (auto b : bits_)
            if (b > 1) throw std::invalid_argument("BinarySequence: elements must be 0 or 1");
    }

    static BinarySequence from_string(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("BinarySequence: invalid character in sequence text");
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return BinarySequence(std::move(bits));
    }

    static BinarySequence from_support(std::size_t period, const std::vector<std::size_t>& support) {
        std::vector<std::uint8_t> bits(period, 0);
        if (period == 0) throw std::invalid_argument("BinarySequence: period must be >= 1");
        for (auto i : support) {
            if (i >= period) throw std::invalid_argument("BinarySequence: support index out of range");
            bits[i] = 1;
        }
        return BinarySequence(std::move(bits));
    }

    std::size_t period() const { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto b : bits_) w += b;
        return w;
    }

    /// Support set D_s: the positions of ones within one period.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> d;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) d.push_back(i);
        return d;
    }

    BinarySequence complement() const {
        std::vector<std::uint8_t> out(bits_.size());
        for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = 1 - bits_[i];
        return BinarySequence(std::move(out));
    }

    /// Cyclic left shift: bit i of the result is s_{(i+tau) mod N}.
    BinarySequence shifted(std::size_t tau) const {
        const std::size_t n = bits_.size();
        tau %= n;
        std::vector<std::uint8_t> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = bits_[(i + tau) % n];
        return BinarySequence(std::move(out));
    }

    /// Sequence polynomial P_s(x) = sum s_i x^i, exact over the integers.
    Int poly_eval(const Int& x) const {
        Int acc = 0;
        for (std::size_t i = bits_.size(); i-- > 0;) {
            acc *= x;
            if (bits_[i]) acc += 1;
        }
        return acc;
    }

    /// P_s(2), assembled directly from the bit pattern.
    Int poly_eval_2() const {
        std::vector<std::uint64_t> words((bits_.size() + 63) / 64, 0);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) words[i / 64] |= std::uint64_t(1) << (i % 64);
        Int v;
        import_bits(v, words.begin(), words.end(), 64, /*msv_first=*/false);
        return v;
    }

    bool constant() const {
        const std::size_t w = weight();
        return w == 0 || w == bits_.size();
    }

    std::string to_string() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) s[i] = '1';
        return s;
    }

    friend bool operator==(const BinarySequence& a, const BinarySequence& b) = default;

private:
    std::vector<std::uint8_t> bits_;
};

inline Int sequence_polynomial_eval(const BinarySequence& s, const Int& x) { return s.poly_eval(x); }

namespace detail {

/// Two periods of s packed into 64-bit words, so any length-N window starting
/// at offset tau < N can be pulled out with two shifts per word.
struct PackedPeriods {
    std::size_t n;
    std::vector<std::uint64_t> words;  // 2n bits

    explicit PackedPeriods(const BinarySequence& s) : n(s.period()), words((2 * s.period() + 63) / 64, 0) {
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t i = 0; i < n; ++i)
                if (s[i]) {
                    const std::size_t pos = r * n + i;
                    words[pos / 64] |= std::uint64_t(1) << (pos % 64);
                }
    }

    std::uint64_t window_word(std::size_t tau, std::size_t wi) const {
        const std::size_t bitpos = tau + wi * 64;
        const std::size_t base = bitpos / 64;
        const unsigned sh = bitpos % 64;
        std::uint64_t lo = words[base] >> sh;
        if (sh != 0 && base + 1 < words.size()) lo |= words[base + 1] << (64 - sh);
        return lo;
    }
};

/// popcount over the first n bits of f(word_index) for a word function.
template <typename WordFn>
std::size_t popcount_window(std::size_t n, WordFn&& f) {
    std::size_t count = 0;
    const std::size_t full = n / 64;
    for (std::size_t wi = 0; wi < full; ++wi) count += std::popcount(f(wi));
    const unsigned tail = n % 64;
    if (tail != 0) count += std::popcount(f(full) & ((std::uint64_t(1) << tail) - 1));
    return count;
}

}  // namespace detail

enum class AcClass { ideal, optimal_1mod4, optimal_2mod4, optimal_0mod4, none };

inline const char* to_string(AcClass c) {
    switch (c) {
        case AcClass::ideal: return "ideal";
        case AcClass::optimal_1mod4: return "optimal_1mod4";
        case AcClass::optimal_2mod4: return "optimal_2mod4";
        case AcClass::optimal_0mod4: return "optimal_0mod4";
        case AcClass::none: return "none";
    }
    return "none";
}

struct AutocorrelationProfile {
    std::vector<std::int64_t> values;  // C_s(tau) for tau = 0..N-1
    AcClass classification;
};

/// C_s(tau) = sum_i (-1)^{s_i + s_{i+tau}} for every shift, plus the
/// out-of-phase classification. The values are computed by XOR/popcount over
/// packed words, so a full profile costs O(N^2/64).
inline AutocorrelationProfile autocorrelation_profile(const BinarySequence& s) {
    const std::size_t n = s.period();
    const detail::PackedPeriods packed(s);

    AutocorrelationProfile out;
    out.values.resize(n);
    out.values[0] = static_cast<std::int64_t>(n);
    for (std::size_t tau = 1; tau < n; ++tau) {
        const std::size_t disagreements = detail::popcount_window(
            n, [&](std::size_t wi) { return packed.window_word(0, wi) ^ packed.window_word(tau, wi); });
        out.values[tau] = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(disagreements);
    }

    bool ideal = true, opt1 = true, opt2 = true, opt0 = true;
    for (std::size_t tau = 1; tau < n; ++tau) {
        const std::int64_t c = out.values[tau];
        ideal &= (c == -1);
        opt1 &= (c == 1 || c == -3);
        opt2 &= (c == 2 || c == -2);
        opt0 &= (c == 0 || c == -4);
    }
    if (s.constant()) {
        out.classification = AcClass::none;  // degenerate: no nontrivial out-of-phase behavior
    } else if (ideal && n % 4 == 3) {
        out.classification = AcClass::ideal;
    } else if (opt1 && n % 4 == 1) {
        out.classification = AcClass::optimal_1mod4;
    } else if (opt2 && n % 4 == 2) {
        out.classification = AcClass::optimal_2mod4;
    } else if (opt0 && n % 4 == 0) {
        out.classification = AcClass::optimal_0mod4;
    } else {
        out.classification = AcClass::none;
    }
    return out;
}

struct DifferenceSetCertificate {
    std::size_t modulus = 0;   // N
    std::size_t set_size = 0;  // k
    std::size_t lambda = 0;    // common intersection count, valid when holds
    bool holds = false;
};

/// Exhaustively tests whether the support of s is an (N, k, lambda) cyclic
/// difference set: |D ∩ (D + tau)| must be one constant for every tau != 0.
inline DifferenceSetCertificate support_difference_set_check(const BinarySequence& s) {
    const std::size_t n = s.period();
    const detail::PackedPeriods packed(s);

    DifferenceSetCertificate cert;
    cert.modulus = n;
    cert.set_size = s.weight();
    cert.holds = true;
    for (std::size_t tau = 1; tau < n; ++tau) {
        const std::size_t c = detail::popcount_window(
            n, [&](std::size_t wi) { return packed.window_word(0, wi) & packed.window_word(tau, wi); });
        if (tau == 1) {
            cert.lambda = c;
        } else if (c != cert.lambda) {
            cert.holds = false;
            cert.lambda = 0;
            break;
        }
    }
    if (n == 1) cert.lambda = 0;
    return cert;
}

// ---------------------------------------------------------------------------
// Text format: one line of '0'/'1' characters giving one period; optional
// leading comment lines starting with '#'. Anything else is rejected.

inline BinarySequence read_sequence(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        return BinarySequence::from_string(line);
    }
    throw std::invalid_argument("sequence input: no data line found");
}

inline BinarySequence read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("sequence input: cannot open " + path);
    return read_sequence(in);
}

inline void write_sequence(std::ostream& out, const BinarySequence& s,
                           const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << s.to_string() << '\n';
}

inline void write_sequence_file(const std::string& path, const BinarySequence& s,
                                const std::vector<std::string>& comments = {}) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("sequence output: cannot open " + path);
    write_sequence(out, s, comments);
}

}  // namespace twoadic
