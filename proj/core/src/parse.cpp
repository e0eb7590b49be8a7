#include "mzlab/parse.hpp"

#include "mzlab/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace mzlab {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Ring& ring, bool allow_vars)
        : text_(text), ring_(ring), allow_vars_(allow_vars)
    {
    }

    Polynomial parse()
    {
        skip_ws();
        if (at_end())
            fail("empty expression", pos_);
        Polynomial result = expr();
        skip_ws();
        if (!at_end())
            fail(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return result;
    }

private:
    [[noreturn]] static void fail(const std::string& msg, std::size_t at) { throw ParseError(msg, at); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    Polynomial expr()
    {
        Polynomial acc(ring_);
        bool negate = false;
        skip_ws();
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        Polynomial t = term();
        acc += negate ? -t : t;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos_;
            Polynomial next = term();
            acc += c == '-' ? -next : next;
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (accept('*'))
            acc = acc * factor();
        return acc;
    }

    Integer digits(const char* what)
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail(std::string("expected ") + what, start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    long small_int(const Integer& v, std::size_t at)
    {
        if (!v.fits_slong_p())
            fail("exponent too large", at);
        return v.get_si();
    }

    Polynomial factor()
    {
        skip_ws();
        const std::size_t start = pos_;
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')'))
                fail("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = digits("integer");
            Integer den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                den = digits("denominator");
                if (den == 0)
                    fail("zero denominator", at);
            }
            Rational r(num, den);
            r.canonicalize();
            return Polynomial::constant(ring_, ring_.field.from_rational(r));
        }
        if (c == 'z') {
            ++pos_;
            if (ring_.field.conductor() == 1)
                fail("'z' requires m > 1", start);
            long k = 1;
            if (accept('^')) {
                skip_ws();
                bool neg = false;
                if (peek() == '-' || peek() == '+') {
                    neg = peek() == '-';
                    ++pos_;
                }
                const std::size_t at = pos_;
                k = small_int(digits("exponent"), at);
                if (neg)
                    k = -k;
            }
            return Polynomial::constant(ring_, ring_.field.zeta_pow(k));
        }
        if (c == 'x') {
            ++pos_;
            if (!allow_vars_)
                fail("variables are not allowed in a scalar", start);
            const std::size_t at = pos_;
            Integer index = digits("variable index");
            if (index < 1 || index > static_cast<unsigned long>(ring_.n))
                fail("variable index out of range", at);
            unsigned e = 1;
            if (accept('^')) {
                skip_ws();
                const std::size_t eat = pos_;
                if (peek() == '-')
                    fail("negative exponent", eat);
                const long v = small_int(digits("exponent"), eat);
                if (v > static_cast<long>(ring_.cap))
                    throw DegreeCapExceeded(static_cast<unsigned>(std::min<long>(v, 1L << 30)), ring_.cap);
                e = static_cast<unsigned>(v);
            }
            MultiIndex beta(ring_.n);
            beta[index.get_ui() - 1] = e;
            return Polynomial::monomial(ring_, beta);
        }
        if (at_end())
            fail("unexpected end of input", pos_);
        fail(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    const Ring& ring_;
    bool allow_vars_;
    std::size_t pos_ = 0;
};

std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view text)
{
    std::vector<std::pair<std::string_view, std::size_t>> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            parts.emplace_back(text.substr(start, i - start), start);
            start = i + 1;
        } else if (text[i] == '(') {
            ++depth;
        } else if (text[i] == ')') {
            --depth;
        }
    }
    return parts;
}

template <class Fn>
auto with_offset(std::size_t offset, Fn&& fn)
{
    try {
        return fn();
    } catch (const ParseError& e) {
        std::string msg = e.what();
        msg = msg.substr(0, msg.rfind(" at index "));
        throw ParseError(msg, offset + e.position());
    }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring)
{
    return Parser(text, ring, true).parse();
}

Scalar parse_scalar(std::string_view text, Field field)
{
    const Ring ring{1, field};
    const Polynomial p = Parser(text, ring, false).parse();
    return p.coefficient(MultiIndex(1));
}

std::vector<Scalar> parse_scalar_list(std::string_view text, Field field)
{
    std::vector<Scalar> out;
    for (const auto& [part, offset] : split_top_level(text))
        out.push_back(with_offset(offset, [&, p = part] { return parse_scalar(p, field); }));
    return out;
}

MultiIndex parse_multiindex(std::string_view text, std::size_t n)
{
    const auto parts = split_top_level(text);
    if (parts.size() != n)
        throw ParseError("expected " + std::to_string(n) + " exponents, got " + std::to_string(parts.size()), 0);
    MultiIndex beta(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [part, offset] = parts[i];
        std::size_t a = 0;
        while (a < part.size() && std::isspace(static_cast<unsigned char>(part[a])))
            ++a;
        std::size_t b = a;
        while (b < part.size() && std::isdigit(static_cast<unsigned char>(part[b])))
            ++b;
        if (a == b)
            throw ParseError("expected non-negative integer", offset + a);
        std::size_t c = b;
        while (c < part.size() && std::isspace(static_cast<unsigned char>(part[c])))
            ++c;
        if (c != part.size())
            throw ParseError("unexpected character", offset + c);
        if (b - a > 6)
            throw ParseError("exponent too large", offset + a);
        beta[i] = static_cast<unsigned>(std::stoul(std::string(part.substr(a, b - a))));
    }
    return beta;
}

MonomialOrder parse_order(std::string_view text, std::size_t n)
{
    const std::size_t colon = text.find(':');
    const std::string_view kind_text = text.substr(0, colon);
    MonomialOrder::Kind kind;
    if (kind_text == "lex")
        kind = MonomialOrder::Kind::lex;
    else if (kind_text == "grlex")
        kind = MonomialOrder::Kind::grlex;
    else
        throw ParseError("unknown order '" + std::string(kind_text) + "'", 0);
    std::vector<std::size_t> priority(n);
    std::iota(priority.begin(), priority.end(), 0);
    if (colon != std::string_view::npos) {
        priority.clear();
        for (std::size_t i = colon + 1; i < text.size(); ++i) {
            const char c = text[i];
            if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
                continue;
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError(std::string("unexpected '") + c + "'", i);
            std::size_t j = i;
            while (j + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[j + 1])))
                ++j;
            // comma-free permutations such as "312" list one digit per variable
            const bool separated = text.find(',', colon) != std::string_view::npos;
            if (!separated)
                j = i;
            const unsigned long v = std::stoul(std::string(text.substr(i, j - i + 1)));
            if (v < 1 || v > n)
                throw ParseError("variable index out of range", i);
            priority.push_back(v - 1);
            i = j;
        }
        auto sorted = priority;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.size() != n || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError("order priority must be a permutation of 1.." + std::to_string(n), colon + 1);
    }
    return MonomialOrder(kind, std::move(priority));
}

}  // namespace mzlab
