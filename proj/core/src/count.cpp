#include "pinnacle/count.hpp"

#include <charconv>

namespace pinnacle {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set is deterministic for all 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

ArithMode ArithMode::modular(std::uint64_t prime) {
    if (prime < 3 || prime % 2 == 0)
        throw Error("modulus must be an odd prime, got " + std::to_string(prime));
    if (prime >= (1ull << 63))
        throw Error("modulus must be below 2^63");
    if (!is_prime_u64(prime))
        throw Error("modulus " + std::to_string(prime) + " is not prime");
    return ArithMode(prime);
}

std::uint64_t ArithMode::prime() const {
    if (is_exact()) throw Error("exact mode has no modulus");
    return prime_;
}

std::string ArithMode::str() const {
    return is_exact() ? "exact" : "mod:" + std::to_string(prime_);
}

ArithMode ArithMode::parse(std::string_view text) {
    if (text == "exact") return exact();
    constexpr std::string_view kPrefix = "mod:";
    if (text.substr(0, kPrefix.size()) == kPrefix) {
        std::uint64_t p = 0;
        auto body = text.substr(kPrefix.size());
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc() && ptr == body.data() + body.size())
            return modular(p);
    }
    throw Error("bad arithmetic mode '" + std::string(text) + "' (want \"exact\" or \"mod:<prime>\")");
}

namespace op_counter {

namespace {
thread_local std::uint64_t g_ops = 0;
}

void reset() noexcept { g_ops = 0; }
std::uint64_t total() noexcept { return g_ops; }
void bump() noexcept { ++g_ops; }

}  // namespace op_counter

Count Count::exact(BigInt value) {
    if (value < 0) throw Error("counts are non-negative");
    Count c{ArithMode::exact()};
    c.big_ = std::move(value);
    return c;
}

Count Count::of(const ArithMode& mode, std::uint64_t value) {
    Count c{mode};
    if (mode.is_exact())
        c.big_ = value;
    else
        c.res_ = value % mode.prime();
    return c;
}

bool Count::is_zero() const noexcept {
    return mode_.is_exact() ? big_.is_zero() : res_ == 0;
}

Count Count::operator+(const Count& rhs) const {
    if (mode_ != rhs.mode_) throw ModeMismatch();
    op_counter::bump();
    Count out{mode_};
    if (mode_.is_exact()) {
        out.big_ = big_ + rhs.big_;
    } else {
        const std::uint64_t p = mode_.prime();
        std::uint64_t s = res_ + rhs.res_;  // p < 2^63, no overflow
        out.res_ = s >= p ? s - p : s;
    }
    return out;
}

Count Count::operator-(const Count& rhs) const {
    if (mode_ != rhs.mode_) throw ModeMismatch();
    op_counter::bump();
    Count out{mode_};
    if (mode_.is_exact()) {
        if (big_ < rhs.big_) throw Error("count subtraction went negative");
        out.big_ = big_ - rhs.big_;
    } else {
        const std::uint64_t p = mode_.prime();
        out.res_ = res_ >= rhs.res_ ? res_ - rhs.res_ : res_ + (p - rhs.res_);
    }
    return out;
}

Count Count::operator*(const Count& rhs) const {
    if (mode_ != rhs.mode_) throw ModeMismatch();
    op_counter::bump();
    Count out{mode_};
    if (mode_.is_exact())
        out.big_ = big_ * rhs.big_;
    else
        out.res_ = mulmod(res_, rhs.res_, mode_.prime());
    return out;
}

bool Count::operator==(const Count& rhs) const {
    if (mode_ != rhs.mode_) throw ModeMismatch();
    return mode_.is_exact() ? big_ == rhs.big_ : res_ == rhs.res_;
}

Count Count::div_exact(const Count& divisor) const {
    if (mode_ != divisor.mode_) throw ModeMismatch();
    if (divisor.is_zero()) throw Error("division by zero");
    op_counter::bump();
    Count out{mode_};
    if (mode_.is_exact()) {
        BigInt q, r;
        boost::multiprecision::divide_qr(big_, divisor.big_, q, r);
        if (!r.is_zero()) throw Error("exact division left a remainder");
        out.big_ = std::move(q);
    } else {
        const std::uint64_t p = mode_.prime();
        out.res_ = mulmod(res_, powmod(divisor.res_, p - 2, p), p);
    }
    return out;
}

bool Count::is_even() const {
    if (mode_.is_modular()) throw Error("parity is undefined for residues");
    return (big_ & 1) == 0;
}

const BigInt& Count::exact_value() const {
    if (mode_.is_modular()) throw Error("modular count has no exact value");
    return big_;
}

std::uint64_t Count::residue() const {
    if (mode_.is_exact()) throw Error("exact count has no residue");
    return res_;
}

std::string Count::str() const {
    return mode_.is_exact() ? big_.str() : std::to_string(res_);
}

Count reduced(const Count& value, const ArithMode& target) {
    if (value.mode() != ArithMode::exact()) {
        if (value.mode() != target) throw ModeMismatch();
        return value;
    }
    if (target.is_exact()) return value;
    BigInt r = value.exact_value() % BigInt(target.prime());
    return Count::of(target, r.convert_to<std::uint64_t>());
}

}  // namespace pinnacle
