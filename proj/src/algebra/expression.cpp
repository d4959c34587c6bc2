#include "dicrit/algebra/expression.hpp"

#include "dicrit/error.hpp"

#include <cctype>

namespace dicrit::algebra {

namespace {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const FieldPtr& field, const std::vector<std::string>& names)
        : text_(text), field_(field), names_(names) {}

    Polynomial parse()
    {
        Polynomial p = sum();
        skip_space();
        if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& msg) const
    {
        throw ParseError("expression", msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial sum()
    {
        Polynomial acc(field_, names_.size());
        bool negate = false;
        skip_space();
        if (accept('-')) negate = true;
        else accept('+');
        Polynomial t = product();
        acc += negate ? -t : t;
        while (true) {
            if (accept('+')) acc += product();
            else if (accept('-')) acc -= product();
            else break;
        }
        return acc;
    }

    Polynomial product()
    {
        Polynomial acc = power();
        while (true) {
            skip_space();
            if (accept('*')) {
                acc *= power();
            } else if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
                acc *= power();
            } else if (accept('/')) {
                Polynomial d = power();
                if (!d.is_constant() || d.is_zero()) error("division only by nonzero constants");
                acc *= d.constant_term().inverse();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial power()
    {
        Polynomial base = atom();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) error("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Polynomial atom()
    {
        skip_space();
        if (pos_ >= text_.size()) error("unexpected end");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = sum();
            if (!accept(')')) error("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            mpz_class n(std::string(text_.substr(start, pos_ - start)));
            return Polynomial::constant(field_, names_.size(), Scalar::from_rational(field_, mpq_class(n)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == name) return Polynomial::variable(field_, names_.size(), i);
            if (name == "a" && field_->is_extension())
                return Polynomial::constant(field_, names_.size(), Scalar::generator(field_));
            pos_ = start;
            error("unknown variable '" + name + "'");
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const FieldPtr& field_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_expression(std::string_view text, const FieldPtr& field, const std::vector<std::string>& names)
{
    return ExpressionParser(text, field, names).parse();
}

}  // namespace dicrit::algebra
