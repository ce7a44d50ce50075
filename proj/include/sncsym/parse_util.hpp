#pragma once

#include "sncsym/rational.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace sncsym::detail {

/// Minimal recursive-descent cursor over a text buffer.
class Cursor {
public:
    explicit Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    /// Peek without skipping whitespace.
    char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* grammar) {
        if (!accept(c)) fail(std::string("expected '") + c + "' in " + grammar);
    }

    int integer(const char* grammar) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail(std::string("expected a nonnegative integer in ") + grammar);
        if (pos_ - start > 9) fail_at("integer too large", start);
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    /// A rational literal: optional sign, digits, optional "/digits".
    Rational rational() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        return parse_rational(text_.substr(start, pos_ - start), base_ + start);
    }

    std::size_t position() const { return base_ + pos_; }
    std::size_t offset() const { return pos_; }
    void set_offset(std::size_t p) { pos_ = p; }
    std::string_view rest() const { return text_.substr(pos_); }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, base_ + at); }

private:
    std::string_view text_;
    std::size_t base_ = 0;
    std::size_t pos_ = 0;
};

}  // namespace sncsym::detail
