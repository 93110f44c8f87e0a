#include "vknot/gauss.hpp"

#include <cctype>
#include <limits>

namespace vknot {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    LinkGaussCode parse()
    {
        skip_space();
        if (pos_ == text_.size())
            return make_code({Component{}});

        std::vector<Component> components;
        components.push_back(component());
        skip_space();
        while (pos_ < text_.size()) {
            expect('/');
            components.push_back(component());
            skip_space();
        }
        return make_code(std::move(components));
    }

private:
    Component component()
    {
        skip_space();
        if (peek() == '(') {
            ++pos_;
            skip_space();
            expect(')');
            return {};
        }
        Component c;
        c.push_back(entry());
        skip_space();
        while (peek() == 'O' || peek() == 'U') {
            c.push_back(entry());
            skip_space();
        }
        return c;
    }

    GaussEntry entry()
    {
        GaussEntry e;
        skip_space();
        char p = peek();
        if (p == 'O')
            e.passage = Passage::Over;
        else if (p == 'U')
            e.passage = Passage::Under;
        else
            fail("expected 'O', 'U' or '('");
        ++pos_;
        e.label = CrossingLabel(integer());
        skip_space();
        char s = peek();
        if (s == '+')
            e.sign = Sign::Positive;
        else if (s == '-')
            e.sign = Sign::Negative;
        else
            fail("expected '+' or '-'");
        ++pos_;
        return e;
    }

    std::uint32_t integer()
    {
        skip_space();
        std::size_t start = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a crossing label");
        if (peek() == '0')
            fail("labels are positive integers without leading zeros");
        std::uint64_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (value > std::numeric_limits<std::uint32_t>::max()) {
                pos_ = start;
                fail("label too large");
            }
            ++pos_;
        }
        return static_cast<std::uint32_t>(value);
    }

    void expect(char c)
    {
        skip_space();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const
    {
        std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
        throw ParseError(pos_, message + ", found " + found);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

LinkGaussCode parse_gauss(std::string_view text)
{
    return Parser(text).parse();
}

std::string render_gauss(const LinkGaussCode& code)
{
    std::string out;
    const auto& comps = code.components();
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        if (ci)
            out += '/';
        if (comps[ci].empty()) {
            out += "()";
            continue;
        }
        for (const auto& e : comps[ci]) {
            out += e.passage == Passage::Over ? 'O' : 'U';
            out += std::to_string(e.label.id);
            out += e.sign == Sign::Positive ? '+' : '-';
        }
    }
    return out;
}

} // namespace vknot
