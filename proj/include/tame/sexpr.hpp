#ifndef TAME_SEXPR_HPP
#define TAME_SEXPR_HPP

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tame
{

class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string &msg, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), m_line(line),
          m_column(column)
    {
    }
    int line() const
    {
        return m_line;
    }
    int column() const
    {
        return m_column;
    }

private:
    int m_line;
    int m_column;
};

struct SExpr {
    bool is_list = false;
    std::string atom;
    std::vector<SExpr> items;
    int line = 0;
    int column = 0;

    bool is_symbol(std::string_view s) const
    {
        return !is_list && atom == s;
    }
    [[noreturn]] void fail(const std::string &msg) const
    {
        throw ParseError(msg, line, column);
    }
};

class SExprReader
{
public:
    explicit SExprReader(std::string_view text) : m_text(text) {}

    // All top-level expressions in the text.
    std::vector<SExpr> read_all()
    {
        std::vector<SExpr> out;
        skip_space();
        while (m_pos < m_text.size()) {
            out.push_back(read());
            skip_space();
        }
        return out;
    }

    SExpr read()
    {
        skip_space();
        if (m_pos >= m_text.size()) {
            throw ParseError("unexpected end of input", m_line, m_col);
        }
        SExpr e;
        e.line = m_line;
        e.column = m_col;
        const char c = m_text[m_pos];
        if (c == '(') {
            advance();
            e.is_list = true;
            for (;;) {
                skip_space();
                if (m_pos >= m_text.size()) {
                    throw ParseError("unterminated list", e.line, e.column);
                }
                if (m_text[m_pos] == ')') {
                    advance();
                    break;
                }
                e.items.push_back(read());
            }
            return e;
        }
        if (c == ')') {
            throw ParseError("unexpected ')'", m_line, m_col);
        }
        while (m_pos < m_text.size() && !std::isspace(static_cast<unsigned char>(m_text[m_pos])) &&
               m_text[m_pos] != '(' && m_text[m_pos] != ')' && m_text[m_pos] != ';') {
            e.atom.push_back(m_text[m_pos]);
            advance();
        }
        return e;
    }

private:
    void advance()
    {
        if (m_text[m_pos] == '\n') {
            ++m_line;
            m_col = 1;
        } else {
            ++m_col;
        }
        ++m_pos;
    }
    void skip_space()
    {
        while (m_pos < m_text.size()) {
            const char c = m_text[m_pos];
            if (c == ';') {
                while (m_pos < m_text.size() && m_text[m_pos] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
    int m_line = 1;
    int m_col = 1;
};

inline SExpr read_sexpr(std::string_view text)
{
    SExprReader r(text);
    auto all = r.read_all();
    if (all.size() != 1) {
        if (all.empty()) {
            throw ParseError("empty input", 1, 1);
        }
        all[1].fail("trailing input after expression");
    }
    return std::move(all.front());
}

} // namespace tame

#endif // TAME_SEXPR_HPP
