#include "spec_file.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "forge/errors.hpp"

namespace forge::cli {

namespace {

struct Line {
    std::size_t number = 0;
    std::string key;
    std::string label;
    std::string value;
};

struct Section {
    std::size_t header = 0;
    std::vector<Line> lines;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

class Parser {
public:
    Parser(const std::string& text, std::string path) : path_(std::move(path)) {
        std::istringstream in(text);
        std::string raw;
        std::string current;
        sections_[""].header = 0;
        std::size_t number = 0;
        while (std::getline(in, raw)) {
            ++number;
            auto hash = raw.find('#');
            std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') error(number, "unterminated section header");
                current = trim(line.substr(1, line.size() - 2));
                static const std::set<std::string> known{"grading", "weights", "group",  "characters",
                                                         "extension", "operator", "dynamics", "witness"};
                if (!known.count(current)) error(number, "unknown section [" + current + "]");
                if (sections_.count(current)) error(number, "section [" + current + "] appears twice");
                sections_[current].header = number;
                continue;
            }
            auto eq = line.find('=');
            if (eq == std::string::npos) error(number, "expected 'key = value'");
            auto lhs = words(line.substr(0, eq));
            if (lhs.empty() || lhs.size() > 2) error(number, "malformed key");
            Line l{number, lhs[0], lhs.size() == 2 ? lhs[1] : "", trim(line.substr(eq + 1))};
            sections_[current].lines.push_back(std::move(l));
        }
        if (number == 0 || (sections_.size() == 1 && sections_[""].lines.empty())) {
            error(0, "spec file is empty");
        }
    }

    [[noreturn]] void error(std::size_t line, const std::string& msg) const {
        fail(ErrorKind::Input, path_ + (line ? ":" + std::to_string(line) : "") + ": " + msg);
    }

    bool has(const std::string& section) const { return sections_.count(section) > 0; }

    const Section& section(const std::string& name) const {
        auto it = sections_.find(name);
        if (it == sections_.end()) error(0, "missing section [" + name + "]");
        return it->second;
    }

    void allow(const std::string& name, const std::set<std::string>& keys) const {
        auto it = sections_.find(name);
        if (it == sections_.end()) return;
        std::set<std::string> seen;
        for (const auto& l : it->second.lines) {
            if (!keys.count(l.key)) {
                error(l.number, "unknown key '" + l.key + "'" + (name.empty() ? "" : " in [" + name + "]"));
            }
            static const std::set<std::string> repeatable{"weight", "class", "chi", "product", "derivative",
                                                          "projection"};
            if (!repeatable.count(l.key) && !seen.insert(l.key).second) error(l.number, "duplicate key '" + l.key + "'");
            if (!l.label.empty() && l.key != "chi") error(l.number, "unexpected label after '" + l.key + "'");
        }
    }

    const Line* find(const std::string& section, const std::string& key) const {
        auto it = sections_.find(section);
        if (it == sections_.end()) return nullptr;
        for (const auto& l : it->second.lines) {
            if (l.key == key) return &l;
        }
        return nullptr;
    }

    std::vector<const Line*> all(const std::string& section, const std::string& key) const {
        std::vector<const Line*> out;
        auto it = sections_.find(section);
        if (it == sections_.end()) return out;
        for (const auto& l : it->second.lines) {
            if (l.key == key) out.push_back(&l);
        }
        return out;
    }

    const Line& require(const std::string& section, const std::string& key) const {
        if (auto l = find(section, key)) return *l;
        std::size_t at = section.empty() ? 0 : this->section(section).header;
        error(at, "missing key '" + key + "'" + (section.empty() ? "" : " in [" + section + "]"));
    }

    std::int64_t integer(const Line& l, const std::string& token) const {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            error(l.number, "expected an integer, found '" + token + "'");
        }
        return v;
    }

    std::int64_t integer(const Line& l) const {
        auto w = words(l.value);
        if (w.size() != 1) error(l.number, "expected a single integer for '" + l.key + "'");
        return integer(l, w[0]);
    }

    std::vector<std::int64_t> integers(const Line& l, const std::string& text) const {
        std::vector<std::int64_t> out;
        for (const auto& w : words(text)) out.push_back(integer(l, w));
        return out;
    }

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::map<std::string, Section> sections_;
};

std::int64_t read_prime(const Parser& ps, const std::string& key) {
    const auto& l = ps.require("", key);
    auto p = ps.integer(l);
    if (!is_prime(p)) ps.error(l.number, key + " = " + std::to_string(p) + " is not a prime");
    return p;
}

WeightSystem read_diagonal(const Parser& ps) {
    ps.allow("grading", {"free_rank", "torsion"});
    ps.allow("weights", {"weight", "positivity"});
    const std::int64_t p = read_prime(ps, "prime");
    GradingGroup g;
    if (auto l = ps.find("grading", "free_rank")) {
        auto r = ps.integer(*l);
        if (r < 0) ps.error(l->number, "free_rank must be nonnegative");
        g.free_rank = static_cast<std::size_t>(r);
    }
    if (auto l = ps.find("grading", "torsion")) {
        g.torsion_orders = ps.integers(*l, l->value);
        for (auto m : g.torsion_orders) {
            if (m < 2) ps.error(l->number, "torsion orders must be at least 2");
            if (gcd(m, p) != 1) {
                ps.error(l->number, "prime " + std::to_string(p) + " is not coprime to torsion order " +
                                        std::to_string(m) + " (p must be coprime to every torsion order)");
            }
        }
    }
    const std::size_t r = g.free_rank, s = g.torsion_orders.size();
    std::vector<Character> weights;
    auto lines = ps.all("weights", "weight");
    if (lines.empty()) ps.error(ps.has("weights") ? ps.section("weights").header : 0, "no weight lines given");
    for (const auto* l : lines) {
        Character c;
        auto bar = l->value.find('|');
        if (bar != std::string::npos) {
            c.free_part = ps.integers(*l, l->value.substr(0, bar));
            c.torsion_part = ps.integers(*l, l->value.substr(bar + 1));
        } else if (s == 0) {
            c.free_part = ps.integers(*l, l->value);
        } else if (r == 0) {
            c.torsion_part = ps.integers(*l, l->value);
        } else {
            ps.error(l->number, "mixed gradings need 'free | torsion' weights");
        }
        if (c.free_part.size() != r) {
            ps.error(l->number, "weight has " + std::to_string(c.free_part.size()) + " free entries, grading has rank " +
                                    std::to_string(r));
        }
        if (c.torsion_part.size() != s) {
            ps.error(l->number, "weight has " + std::to_string(c.torsion_part.size()) +
                                    " torsion entries, grading has " + std::to_string(s));
        }
        weights.push_back(std::move(c));
    }
    std::vector<std::int64_t> positivity;
    if (auto l = ps.find("weights", "positivity")) {
        positivity = ps.integers(*l, l->value);
        if (positivity.size() != weights.size()) ps.error(l->number, "one positivity entry per variable required");
        for (auto x : positivity) {
            if (x <= 0) ps.error(l->number, "positivity entries must be positive");
        }
    }
    try {
        return WeightSystem(g, weights, p, positivity);
    } catch (const Error& e) {
        ps.error(ps.section("weights").header, e.detail());
    }
}

GroupData read_group(const Parser& ps) {
    ps.allow("group", {"m", "dim", "class"});
    ps.allow("characters", {"chi"});
    GroupData g;
    g.prime = read_prime(ps, "prime");
    const auto& ml = ps.require("group", "m");
    g.m = ps.integer(ml);
    if (g.m < 1) ps.error(ml.number, "m must be positive");
    if (gcd(g.m, g.prime) != 1) {
        ps.error(ml.number, "prime " + std::to_string(g.prime) + " is not coprime to m = " + std::to_string(g.m) +
                                " (|G| must be prime to p)");
    }
    const auto& dl = ps.require("group", "dim");
    auto dim = ps.integer(dl);
    if (dim < 0) ps.error(dl.number, "dim must be nonnegative");
    g.dim = static_cast<std::size_t>(dim);
    auto classes = ps.all("group", "class");
    if (classes.empty()) ps.error(ps.section("group").header, "no class lines given");
    for (const auto* l : classes) {
        auto parts = split(l->value, ':');
        if (parts.size() != 2) ps.error(l->number, "expected 'class = size : exponents'");
        ConjugacyClassData c;
        c.class_size = ps.integer(*l, parts[0]);
        c.eigenvalue_exponents = ps.integers(*l, parts[1]);
        if (c.class_size < 1) ps.error(l->number, "class size must be positive");
        if (c.eigenvalue_exponents.size() != g.dim) {
            ps.error(l->number, "expected " + std::to_string(g.dim) + " eigenvalue exponents");
        }
        for (auto& a : c.eigenvalue_exponents) a = mod(a, g.m);
        g.classes.push_back(std::move(c));
    }
    auto chis = ps.all("characters", "chi");
    if (chis.empty()) ps.error(ps.has("characters") ? ps.section("characters").header : 0, "no chi lines given");
    for (const auto* l : chis) {
        auto parts = split(l->value, '|');
        if (parts.size() != g.classes.size()) {
            ps.error(l->number, "expected " + std::to_string(g.classes.size()) + " values separated by '|'");
        }
        std::vector<Cyclotomic> row;
        for (const auto& part : parts) {
            try {
                row.push_back(Cyclotomic::parse(g.m, part));
            } catch (const Error& e) {
                ps.error(l->number, e.detail());
            }
        }
        g.table.irreducibles.push_back(std::move(row));
        g.table.labels.push_back(l->label.empty() ? "U" + std::to_string(g.table.labels.size()) : l->label);
    }
    try {
        g.validate();
    } catch (const Error& e) {
        ps.error(ps.section("characters").header, e.detail());
    }
    return g;
}

std::int64_t read_characteristic(const Parser& ps, bool allow_zero) {
    const auto& l = ps.require("", "characteristic");
    auto ch = ps.integer(l);
    if (!(allow_zero && ch == 0) && !is_prime(ch)) {
        ps.error(l.number, "characteristic must be " + std::string(allow_zero ? "0 or " : "") + "a prime");
    }
    return ch;
}

Polynomial read_polynomial(const Parser& ps, const Line& l, const std::string& text,
                           const std::vector<std::string>& names, std::int64_t ch) {
    try {
        return Polynomial::parse(text, names, ch);
    } catch (const Error& e) {
        ps.error(l.number, e.detail());
    }
}

RingExtensionPresentation read_extension(const Parser& ps) {
    ps.allow("extension", {"vars", "basis", "product"});
    RingExtensionPresentation ext;
    ext.characteristic = read_characteristic(ps, true);
    ext.base_variables = words(ps.require("extension", "vars").value);
    const auto& bl = ps.require("extension", "basis");
    ext.basis = words(bl.value);
    if (ext.basis.empty() || ext.basis[0] != "1") ps.error(bl.number, "the basis must start with 1");
    std::set<std::string> distinct(ext.basis.begin(), ext.basis.end());
    if (distinct.size() != ext.basis.size()) ps.error(bl.number, "basis names must be distinct");
    const std::size_t n = ext.basis.size(), vars = ext.base_variables.size();
    auto index = [&](const Line& l, const std::string& name) {
        auto it = std::find(ext.basis.begin(), ext.basis.end(), name);
        if (it == ext.basis.end()) ps.error(l.number, "unknown basis element '" + name + "'");
        return static_cast<std::size_t>(it - ext.basis.begin());
    };
    std::vector<std::vector<std::optional<std::vector<Polynomial>>>> given(
        n, std::vector<std::optional<std::vector<Polynomial>>>(n));
    for (const auto* l : ps.all("extension", "product")) {
        auto arrow = l->value.find("->");
        if (arrow == std::string::npos) ps.error(l->number, "expected 'product = a b -> c_1 | ... | c_n'");
        auto lhs = words(l->value.substr(0, arrow));
        if (lhs.size() != 2) ps.error(l->number, "a product names two basis elements");
        auto parts = split(l->value.substr(arrow + 2), '|');
        if (parts.size() != n) ps.error(l->number, "expected " + std::to_string(n) + " coefficients");
        std::vector<Polynomial> coeffs;
        for (const auto& part : parts) coeffs.push_back(read_polynomial(ps, *l, part, ext.base_variables, ext.characteristic));
        auto i = index(*l, lhs[0]), j = index(*l, lhs[1]);
        if (given[i][j]) ps.error(l->number, "product " + lhs[0] + "*" + lhs[1] + " given twice");
        given[i][j] = std::move(coeffs);
    }
    ext.structure.assign(n, std::vector<std::vector<Polynomial>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (given[i][j]) {
                ext.structure[i][j] = *given[i][j];
            } else if (given[j][i]) {
                ext.structure[i][j] = *given[j][i];
            } else if (i == 0 || j == 0) {
                std::vector<Polynomial> unit(n, Polynomial(vars, ext.characteristic));
                unit[i == 0 ? j : i] = Polynomial::constant(vars, ext.characteristic, 1);
                ext.structure[i][j] = std::move(unit);
            } else {
                ps.error(bl.number, "product " + ext.basis[i] + "*" + ext.basis[j] + " is not given");
            }
        }
    }
    try {
        ext.validate();
    } catch (const Error& e) {
        ps.error(ps.section("extension").header, e.detail());
    }
    return ext;
}

OperatorSpec read_operator(const Parser& ps) {
    ps.allow("operator", {"vars", "window", "max_order", "q", "derivative", "projection"});
    OperatorSpec op;
    op.characteristic = read_characteristic(ps, false);
    const auto& vl = ps.require("operator", "vars");
    op.variables = words(vl.value);
    if (op.variables.empty()) ps.error(vl.number, "at least one variable required");
    const std::size_t n = op.variables.size();
    const auto& wl = ps.require("operator", "window");
    op.window = ps.integer(wl);
    if (op.window < 1) ps.error(wl.number, "window must be positive");
    if (auto l = ps.find("operator", "max_order")) {
        op.max_order = ps.integer(*l);
        if (op.max_order < 0) ps.error(l->number, "max_order must be nonnegative");
    }
    if (auto l = ps.find("operator", "q")) {
        op.q_checks = ps.integers(*l, l->value);
        for (auto q : op.q_checks) {
            std::int64_t t = q;
            while (t > 1 && t % op.characteristic == 0) t /= op.characteristic;
            if (q < op.characteristic || t != 1) ps.error(l->number, "q must be a power of the characteristic");
        }
    }
    for (const auto* l : ps.all("operator", "derivative")) {
        auto parts = split(l->value, ':');
        if (parts.size() != 2) ps.error(l->number, "expected 'derivative = coefficient : orders'");
        OperatorTerm t;
        t.coefficient = read_polynomial(ps, *l, parts[0], op.variables, op.characteristic);
        t.exponent = ps.integers(*l, parts[1]);
        if (t.exponent.size() != n) ps.error(l->number, "expected one order per variable");
        for (auto a : t.exponent) {
            if (a < 0) ps.error(l->number, "orders must be nonnegative");
        }
        op.terms.push_back(std::move(t));
    }
    for (const auto* l : ps.all("operator", "projection")) {
        auto parts = split(l->value, ':');
        if (parts.size() != 3) ps.error(l->number, "expected 'projection = coefficient : q : residue'");
        OperatorTerm t;
        t.type = OperatorTerm::Type::Projection;
        t.coefficient = read_polynomial(ps, *l, parts[0], op.variables, op.characteristic);
        t.q = ps.integer(*l, parts[1]);
        if (t.q < 1) ps.error(l->number, "q must be positive");
        t.exponent = ps.integers(*l, parts[2]);
        if (t.exponent.size() != n) ps.error(l->number, "expected one residue per variable");
        op.terms.push_back(std::move(t));
    }
    if (op.terms.empty()) ps.error(ps.section("operator").header, "no derivative or projection terms given");
    return op;
}

}  // namespace

TruncatedOperator OperatorSpec::build() const {
    std::optional<TruncatedOperator> total;
    for (const auto& t : terms) {
        auto piece = t.type == OperatorTerm::Type::Derivative
                         ? operators::hasse_derivative(variables.size(), characteristic, t.exponent, window)
                         : operators::residue_projection(variables.size(), characteristic, t.q, t.exponent, window);
        piece = piece.compose_multiplication(t.coefficient);
        total = total ? *total + piece : piece;
    }
    return *total;
}

std::int64_t RingSpec::prime() const {
    switch (kind) {
        case Kind::Diagonal: return diagonal->prime;
        case Kind::Group: return group->prime;
        case Kind::Extension: return extension->characteristic;
        case Kind::Operator: return op->characteristic;
    }
    return 0;
}

const char* to_string(RingSpec::Kind kind) {
    switch (kind) {
        case RingSpec::Kind::Diagonal: return "diagonal";
        case RingSpec::Kind::Group: return "group";
        case RingSpec::Kind::Extension: return "extension";
        case RingSpec::Kind::Operator: return "operator";
    }
    return "?";
}

std::string sha256_hex(const std::string& text) {
    std::string normalised;
    normalised.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') continue;
        normalised.push_back(text[i]);
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(normalised.data(), normalised.size(), digest, &length, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return out.str();
}

RingSpec parse_spec(const std::string& text, const std::string& path) {
    Parser ps(text, path);
    RingSpec spec;
    spec.path = path;
    spec.digest = sha256_hex(text);
    ps.allow("", {"kind", "prime", "characteristic"});
    ps.allow("dynamics", {"division_dims", "e_max"});
    ps.allow("witness", {"c"});
    const auto& kl = ps.require("", "kind");
    static const std::map<std::string, RingSpec::Kind> kinds{{"diagonal", RingSpec::Kind::Diagonal},
                                                             {"group", RingSpec::Kind::Group},
                                                             {"extension", RingSpec::Kind::Extension},
                                                             {"operator", RingSpec::Kind::Operator}};
    auto it = kinds.find(kl.value);
    if (it == kinds.end()) ps.error(kl.number, "kind must be diagonal, group, extension or operator");
    spec.kind = it->second;

    std::set<std::string> expected;
    switch (spec.kind) {
        case RingSpec::Kind::Diagonal:
            spec.diagonal = read_diagonal(ps);
            expected = {"grading", "weights", "dynamics", "witness"};
            break;
        case RingSpec::Kind::Group:
            spec.group = read_group(ps);
            expected = {"group", "characters", "dynamics"};
            break;
        case RingSpec::Kind::Extension:
            spec.extension = read_extension(ps);
            expected = {"extension"};
            break;
        case RingSpec::Kind::Operator:
            spec.op = read_operator(ps);
            expected = {"operator"};
            break;
    }
    for (const auto& name : {"grading", "weights", "group", "characters", "extension", "operator", "dynamics", "witness"}) {
        if (ps.has(name) && !expected.count(name)) {
            ps.error(ps.section(name).header, std::string("section [") + name + "] does not apply to kind " + kl.value);
        }
    }
    if (spec.kind == RingSpec::Kind::Diagonal || spec.kind == RingSpec::Kind::Group) {
        if (ps.find("", "characteristic")) ps.error(ps.require("", "characteristic").number, "use 'prime' for this kind");
    } else if (ps.find("", "prime")) {
        ps.error(ps.require("", "prime").number, "use 'characteristic' for this kind");
    }
    if (auto l = ps.find("dynamics", "division_dims")) {
        for (auto x : ps.integers(*l, l->value)) {
            if (x < 1) ps.error(l->number, "division-algebra dimensions must be positive");
            spec.division_dims.push_back(x);
        }
    }
    if (auto l = ps.find("dynamics", "e_max")) {
        auto e = ps.integer(*l);
        if (e < 1 || e > 12) ps.error(l->number, "e_max must lie in [1, 12]");
        spec.e_max = static_cast<unsigned>(e);
    }
    if (auto l = ps.find("witness", "c")) {
        spec.witness_c = ps.integers(*l, l->value);
        if (spec.witness_c->size() != spec.diagonal->variables()) {
            ps.error(l->number, "c needs one exponent per variable");
        }
    }
    return spec;
}

RingSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Input, path + ": cannot open spec file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str(), path);
}

}  // namespace forge::cli
