#include "oreext/parser.hpp"

#include "oreext/errors.hpp"

#include <cctype>
#include <string>

namespace oreext {

namespace {

constexpr std::size_t kMaxExponent = 1000;

struct BaseRing {
    using Value = BasePoly;
    Value number(const Scalar& c) const { return BasePoly::constant(c); }
    Value y() const { return BasePoly::variable(); }
    Value x(std::size_t offset) const { throw ParseError(offset, "unexpected x in a coefficient expression"); }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value power(const Value& a, std::size_t k) const { return pow(a, k); }
};

struct OreRing {
    using Value = OrePoly;
    AlgebraPtr algebra;
    Value number(const Scalar& c) const { return OrePoly::constant(algebra, c); }
    Value y() const { return OrePoly::from_base(algebra, BasePoly::variable()); }
    Value x(std::size_t) const { return OrePoly::x(algebra); }
    Value mul(const Value& a, const Value& b) const { return ore_mul(a, b); }
    Value power(const Value& a, std::size_t k) const { return pow(a, k); }
};

template <class Ring>
class Parser {
public:
    using Value = typename Ring::Value;

    Parser(std::string_view text, Ring ring) : text_(text), ring_(std::move(ring)) {}

    Value parse() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError(pos_, "empty expression");
        Value v = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return v;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        Value acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Value term() {
        Value acc = factor();
        while (accept('*')) acc = ring_.mul(acc, factor());
        return acc;
    }

    Value factor() {
        if (accept('-')) return -factor();
        Value base = atom();
        if (accept('^')) {
            skip_space();
            const std::size_t at = pos_;
            const BigInt e = uint_literal();
            if (e > kMaxExponent) throw ParseError(at, "exponent exceeds " + std::to_string(kMaxExponent));
            return ring_.power(base, e.get_ui());
        }
        return base;
    }

    Value atom() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError(pos_, "unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')')) throw ParseError(pos_, "expected ')'");
            return v;
        }
        if (c == 'y') {
            ++pos_;
            return ring_.y();
        }
        if (c == 'x') {
            const std::size_t at = pos_++;
            return ring_.x(at);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return ring_.number(rational());
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    Scalar rational() {
        const BigInt num = uint_literal();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            const std::size_t at = pos_;
            const BigInt den = uint_literal();
            if (den == 0) throw ParseError(at, "division by zero");
            Scalar q(num, den);
            q.canonicalize();
            return q;
        }
        return Scalar(num);
    }

    BigInt uint_literal() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(start, "expected an unsigned integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    Ring ring_;
    std::size_t pos_ = 0;
};

} // namespace

BasePoly parse_base(std::string_view text) { return Parser<BaseRing>(text, BaseRing{}).parse(); }

OrePoly parse_operator(std::string_view text, const AlgebraPtr& algebra) {
    return Parser<OreRing>(text, OreRing{algebra}).parse();
}

} // namespace oreext
