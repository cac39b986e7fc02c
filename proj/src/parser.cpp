#include "derivar/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace derivar {

namespace {

// Parse-time monomial: leaf labels are absolute variable indices, not yet
// required to form a permutation (that is checked once the whole
// expression is assembled).
struct RawMono {
    std::string code;
    std::vector<int> ops;
    std::vector<int> vars;
    auto operator<=>(const RawMono&) const = default;
};

using RawPoly = std::map<RawMono, Rational>;

void raw_add(RawPoly& p, const RawMono& m, const Rational& c) {
    auto [it, inserted] = p.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

class Parser {
public:
    Parser(std::string_view src, const std::vector<std::string>& ops) : src_(src), ops_(ops) {}

    RawPoly run() {
        RawPoly p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    std::string_view src_;
    const std::vector<std::string>& ops_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        auto ident_char = [](char c, bool first) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                   (!first && std::isdigit(static_cast<unsigned char>(c)));
        };
        if (pos_ >= src_.size() || !ident_char(src_[pos_], true)) fail("expected identifier");
        ++pos_;
        while (pos_ < src_.size() && ident_char(src_[pos_], false)) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    Rational rational() {
        std::string num = digits();
        std::string den = eat('/') ? digits() : "1";
        Integer d(den);
        if (d == 0) fail("zero denominator");
        Rational r{Integer(num), d};
        r.canonicalize();
        return r;
    }

    RawPoly expr() {
        RawPoly acc;
        Rational sign = eat('-') ? Rational(-1) : Rational(1);
        {
            RawPoly t = term();
            for (auto& [m, c] : t) raw_add(acc, m, sign * c);
        }
        while (true) {
            skip_ws();
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else break;
            RawPoly t = term();
            for (auto& [m, c] : t) raw_add(acc, m, sign * c);
        }
        return acc;
    }

    RawPoly term() {
        Rational coeff(1);
        skip_ws();
        bool neg = false;
        if (pos_ + 1 < src_.size() && src_[pos_] == '-' &&
            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
            neg = true;
            ++pos_;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = rational();
            if (neg) coeff = -coeff;
            expect('*');
        } else if (neg) {
            fail("expected digits after '-'");
        }
        RawPoly a = atom();
        if (coeff != 1)
            for (auto& [m, c] : a) c *= coeff;
        return a;
    }

    RawPoly atom() {
        skip_ws();
        std::size_t start = pos_;
        std::string name = identifier();
        // variable: 'x' followed by digits only
        if (name.size() >= 2 && name[0] == 'x' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            int v = std::stoi(name.substr(1));
            if (v < 1) {
                pos_ = start;
                fail("variable index must be at least 1");
            }
            RawPoly p;
            raw_add(p, RawMono{"L", {}, {v}}, Rational(1));
            return p;
        }
        auto it = std::find(ops_.begin(), ops_.end(), name);
        if (it == ops_.end()) {
            pos_ = start;
            fail("unknown operation '" + name + "'");
        }
        int op = static_cast<int>(it - ops_.begin());
        expect('(');
        RawPoly left = expr();
        expect(',');
        RawPoly right = expr();
        expect(')');
        RawPoly out;
        for (const auto& [lm, lc] : left)
            for (const auto& [rm, rc] : right) {
                RawMono m;
                m.code = "I" + lm.code + rm.code;
                m.ops.push_back(op);
                m.ops.insert(m.ops.end(), lm.ops.begin(), lm.ops.end());
                m.ops.insert(m.ops.end(), rm.ops.begin(), rm.ops.end());
                m.vars = lm.vars;
                m.vars.insert(m.vars.end(), rm.vars.begin(), rm.vars.end());
                raw_add(out, m, lc * rc);
            }
        return out;
    }
};

}  // namespace

Poly parse_expr(std::string_view src, const std::vector<std::string>& ops, int expected_arity) {
    {
        // the zero polynomial is written "0"
        std::string trimmed;
        for (char c : src)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed == "0") return Poly(expected_arity, static_cast<int>(ops.size()));
    }
    RawPoly raw = Parser(src, ops).run();
    int arity = -1;
    for (const auto& [m, c] : raw) {
        std::vector<int> sorted = m.vars;
        std::sort(sorted.begin(), sorted.end());
        int n = static_cast<int>(sorted.size());
        bool multilinear = true;
        for (int i = 0; i < n; ++i)
            if (sorted[static_cast<std::size_t>(i)] != i + 1) multilinear = false;
        if (!multilinear)
            throw parse_error("expression is not multilinear: every term must use each of x1..xn exactly once", 0);
        if (arity == -1) arity = n;
        if (n != arity)
            throw parse_error("terms have inconsistent arity", 0);
    }
    if (expected_arity > 0 && arity != -1 && arity != expected_arity)
        throw parse_error("expression arity " + std::to_string(arity) + " does not match expected " +
                              std::to_string(expected_arity),
                          0);
    Poly out(arity == -1 ? expected_arity : arity, static_cast<int>(ops.size()));
    for (const auto& [m, c] : raw)
        out.add_term(Monomial(TreeShape::from_code(m.code), m.ops, m.vars), c);
    return out;
}

namespace {

bool is_derived_name(const std::string& name, std::string_view prefix) {
    return name == prefix || name.rfind(std::string(prefix) + "_", 0) == 0;
}

std::string latex_op_symbol(const std::string& name, bool single_op) {
    if (is_derived_name(name, "prec")) {
        std::string suffix = name.size() > 4 ? name.substr(5) : "";
        return suffix.empty() ? "\\prec" : "\\prec_{" + suffix + "}";
    }
    if (is_derived_name(name, "succ")) {
        std::string suffix = name.size() > 4 ? name.substr(5) : "";
        return suffix.empty() ? "\\succ" : "\\succ_{" + suffix + "}";
    }
    if (single_op) return "";  // juxtaposition
    return "\\cdot_{\\mathrm{" + name + "}}";
}

std::string render_tree(std::string_view code, std::size_t& cpos, const std::vector<int>& ops,
                        std::size_t& opos, const std::vector<int>& leaves, std::size_t& lpos,
                        const std::vector<std::string>& names, RenderFormat format, bool top) {
    if (code[cpos] == 'L') {
        ++cpos;
        int v = leaves[lpos++];
        return format == RenderFormat::Latex ? "x_{" + std::to_string(v) + "}"
                                             : "x" + std::to_string(v);
    }
    ++cpos;
    int op = ops[opos++];
    const std::string& name = names[static_cast<std::size_t>(op)];
    std::string left = render_tree(code, cpos, ops, opos, leaves, lpos, names, format, false);
    std::string right = render_tree(code, cpos, ops, opos, leaves, lpos, names, format, false);
    if (format == RenderFormat::Text) return name + "(" + left + "," + right + ")";
    std::string sym = latex_op_symbol(name, names.size() == 1);
    std::string body = sym.empty() ? left + " " + right : left + " " + sym + " " + right;
    return top ? body : "(" + body + ")";
}

}  // namespace

std::string render_monomial(const Monomial& m, const std::vector<std::string>& ops, RenderFormat format) {
    std::size_t cpos = 0, opos = 0, lpos = 0;
    return render_tree(m.shape().code(), cpos, m.op_labels(), opos, m.leaf_vars(), lpos, ops, format,
                       true);
}

std::string render(const Poly& p, const std::vector<std::string>& ops, RenderFormat format) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono = render_monomial(m, ops, format);
        if (a != 1) {
            out += rat_to_string(a);
            out += format == RenderFormat::Latex ? " " : "*";
        }
        out += mono;
    }
    return out;
}

}  // namespace derivar
