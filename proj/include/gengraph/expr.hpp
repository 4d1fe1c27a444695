#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "gengraph/group.hpp"

namespace gengraph {

/// Abstract syntax for group expressions:
///
///   expr := atom ('x' atom)*          (direct product, left-associative)
///   atom := C<n> | D<n> | Q8 | S<n> | A<n> | file(<path>)
///
/// Products are stored flattened, so printing and re-parsing round-trips.
struct GroupExpr {
    enum class Kind { Cyclic, Dihedral, Quaternion8, Symmetric, Alternating, File,
                      Product };
    Kind kind = Kind::Cyclic;
    int n = 0;                        // atom parameter
    std::string path;                 // Kind::File
    std::vector<GroupExpr> factors;   // Kind::Product, always >= 2 entries

    bool operator==(const GroupExpr& o) const {
        return kind == o.kind && n == o.n && path == o.path && factors == o.factors;
    }
};

inline std::string print_expr(const GroupExpr& e) {
    switch (e.kind) {
        case GroupExpr::Kind::Cyclic: return "C" + std::to_string(e.n);
        case GroupExpr::Kind::Dihedral: return "D" + std::to_string(e.n);
        case GroupExpr::Kind::Quaternion8: return "Q8";
        case GroupExpr::Kind::Symmetric: return "S" + std::to_string(e.n);
        case GroupExpr::Kind::Alternating: return "A" + std::to_string(e.n);
        case GroupExpr::Kind::File: return "file(" + e.path + ")";
        case GroupExpr::Kind::Product: {
            std::string s;
            for (auto& f : e.factors) {
                if (!s.empty()) s += "x";
                s += print_expr(f);
            }
            return s;
        }
    }
    return "";
}

namespace detail {

struct ExprParser {
    const std::string& src;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError("expected " + expected, 1, int(pos) + 1);
    }

    bool eof() const { return pos >= src.size(); }
    char peek() const { return src[pos]; }

    int parse_int() {
        if (eof() || !std::isdigit((unsigned char)peek())) fail("an integer");
        long v = 0;
        while (!eof() && std::isdigit((unsigned char)peek())) {
            v = v * 10 + (src[pos++] - '0');
            if (v > 1'000'000) fail("a smaller integer");
        }
        return int(v);
    }

    GroupExpr parse_atom() {
        if (eof()) fail("an atom (C<n>, D<n>, Q8, S<n>, A<n>, file(...))");
        GroupExpr e;
        if (src.compare(pos, 5, "file(") == 0) {
            pos += 5;
            const auto close = src.find(')', pos);
            if (close == std::string::npos) fail("')' closing file(...)");
            e.kind = GroupExpr::Kind::File;
            e.path = src.substr(pos, close - pos);
            pos = close + 1;
            return e;
        }
        const char c = src[pos];
        switch (c) {
            case 'C': e.kind = GroupExpr::Kind::Cyclic; break;
            case 'D': e.kind = GroupExpr::Kind::Dihedral; break;
            case 'Q': e.kind = GroupExpr::Kind::Quaternion8; break;
            case 'S': e.kind = GroupExpr::Kind::Symmetric; break;
            case 'A': e.kind = GroupExpr::Kind::Alternating; break;
            default: fail("an atom (C<n>, D<n>, Q8, S<n>, A<n>, file(...))");
        }
        ++pos;
        e.n = parse_int();
        if (e.kind == GroupExpr::Kind::Quaternion8 && e.n != 8)
            fail("Q8 (only the order-8 quaternion group is supported)");
        return e;
    }

    GroupExpr parse_expr() {
        GroupExpr first = parse_atom();
        if (eof()) return first;
        std::vector<GroupExpr> factors{first};
        while (!eof()) {
            if (peek() != 'x') fail("'x' or end of expression");
            ++pos;
            factors.push_back(parse_atom());
        }
        if (factors.size() == 1) return factors[0];
        GroupExpr p;
        p.kind = GroupExpr::Kind::Product;
        p.factors = std::move(factors);
        return p;
    }
};

}  // namespace detail

inline GroupExpr parse_group_expr(const std::string& text) {
    detail::ExprParser p{text};
    GroupExpr e = p.parse_expr();
    return e;
}

/// Builds the group an expression denotes.
inline FiniteGroup eval_group_expr(const GroupExpr& e,
                                   int order_cap = kDefaultOrderCap,
                                   int assoc_cap = kDefaultAssocCheckCap) {
    switch (e.kind) {
        case GroupExpr::Kind::Cyclic: return make_cyclic(e.n, order_cap);
        case GroupExpr::Kind::Dihedral: return make_dihedral(e.n, order_cap);
        case GroupExpr::Kind::Quaternion8: return make_quaternion8();
        case GroupExpr::Kind::Symmetric: return make_symmetric(e.n);
        case GroupExpr::Kind::Alternating: return make_alternating(e.n);
        case GroupExpr::Kind::File: return load_table(e.path, assoc_cap);
        case GroupExpr::Kind::Product: {
            FiniteGroup g = eval_group_expr(e.factors[0], order_cap, assoc_cap);
            for (std::size_t i = 1; i < e.factors.size(); ++i)
                g = direct_product(
                    g, eval_group_expr(e.factors[i], order_cap, assoc_cap), order_cap);
            return g;
        }
    }
    throw Error("unreachable expression kind");
}

inline FiniteGroup group_from_text(const std::string& text,
                                   int order_cap = kDefaultOrderCap,
                                   int assoc_cap = kDefaultAssocCheckCap) {
    return eval_group_expr(parse_group_expr(text), order_cap, assoc_cap);
}

}  // namespace gengraph
