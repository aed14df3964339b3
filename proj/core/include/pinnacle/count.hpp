#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "pinnacle/error.hpp"

namespace pinnacle {

using BigInt = boost::multiprecision::cpp_int;

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// Selects exact big-integer arithmetic or residues mod a fixed odd prime.
// Counts created under different modes must never be mixed.
class ArithMode {
public:
    static ArithMode exact() noexcept { return ArithMode(0); }
    static ArithMode modular(std::uint64_t prime);

    bool is_exact() const noexcept { return prime_ == 0; }
    bool is_modular() const noexcept { return prime_ != 0; }
    std::uint64_t prime() const;

    bool operator==(const ArithMode&) const noexcept = default;

    std::string str() const;
    // Accepts "exact" or "mod:<prime>".
    static ArithMode parse(std::string_view text);

private:
    explicit ArithMode(std::uint64_t p) noexcept : prime_(p) {}
    std::uint64_t prime_;  // 0 means exact
};

// Thread-local tally of arithmetic operations performed through Count.
// Used to check the asymptotic cost of the counting pipeline.
namespace op_counter {
void reset() noexcept;
std::uint64_t total() noexcept;
void bump() noexcept;
}  // namespace op_counter

// A non-negative count, either an exact big integer or a residue in [0, p).
// All arithmetic checks mode agreement and feeds the op counter.
class Count {
public:
    Count() : mode_(ArithMode::exact()) {}  // exact zero

    static Count exact(BigInt value);
    static Count of(const ArithMode& mode, std::uint64_t value);

    const ArithMode& mode() const noexcept { return mode_; }
    bool is_zero() const noexcept;

    Count operator+(const Count& rhs) const;
    Count operator-(const Count& rhs) const;  // exact mode refuses negative results
    Count operator*(const Count& rhs) const;
    Count& operator+=(const Count& rhs) { return *this = *this + rhs; }
    Count& operator-=(const Count& rhs) { return *this = *this - rhs; }
    Count& operator*=(const Count& rhs) { return *this = *this * rhs; }

    bool operator==(const Count& rhs) const;
    bool operator!=(const Count& rhs) const { return !(*this == rhs); }

    // Exact mode: division must leave no remainder. Modular mode: multiplies
    // by the inverse (divisor must be nonzero mod p).
    Count div_exact(const Count& divisor) const;

    bool is_even() const;  // exact mode only

    const BigInt& exact_value() const;
    std::uint64_t residue() const;

    std::string str() const;  // decimal

private:
    explicit Count(const ArithMode& m) : mode_(m) {}

    ArithMode mode_;
    BigInt big_;              // exact payload
    std::uint64_t res_ = 0;   // modular payload
};

// Projects an exact count into the target mode (identity when both exact).
Count reduced(const Count& value, const ArithMode& target);

}  // namespace pinnacle
