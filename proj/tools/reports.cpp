#include "reports.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "forge/errors.hpp"
#include "forge/frobenius.hpp"

namespace forge::cli {

using forge::to_string;

namespace {

Json number(const Integer& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json numbers(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(number(x));
    return out;
}

Json matrix_json(const IntMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(numbers(row));
    return out;
}

Json generators_json(const std::vector<Exponent>& gens) {
    Json out = Json::array();
    for (const auto& g : gens) out.push_back(to_string(g));
    return out;
}

Json class_json(const CovariantClass& c) {
    Json out;
    out["class"] = describe_key(c.key);
    out["degree"] = describe_character(c.degree);
    out["generators"] = generators_json(c.generators);
    return out;
}

Json header(const std::string& command, const RingSpec& spec) {
    Json out;
    out["command"] = command;
    out["input_digest"] = "sha256:" + spec.digest;
    out["kind"] = to_string(spec.kind);
    if (spec.kind == RingSpec::Kind::Diagonal || spec.kind == RingSpec::Kind::Group) {
        out["prime"] = spec.prime();
    } else {
        out["characteristic"] = spec.prime();
    }
    return out;
}

const WeightSystem& diagonal_of(const RingSpec& spec, const std::string& command) {
    if (!spec.diagonal) fail(ErrorKind::Input, command + " needs a diagonal spec");
    return *spec.diagonal;
}

// Closure classes, optionally served from a cache directory keyed by the input digest.
struct Closure {
    std::vector<CovariantClass> classes;
    bool ffrt = false;
    unsigned rounds = 0;
    std::optional<ClassMatrix> matrix;
};

Json rational_vector(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

std::optional<Closure> load_cached(const WeightSystem& ws, const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        Json doc = Json::parse(in);
        Closure out;
        out.rounds = doc.at("rounds").get<unsigned>();
        out.ffrt = true;
        for (const auto& c : doc.at("classes")) {
            RationalCharacter degree;
            for (const auto& x : c.at("free")) degree.free_part.push_back(parse_rational(x.get<std::string>()));
            for (const auto& x : c.at("torsion")) degree.torsion_part.push_back(x.get<std::int64_t>());
            std::vector<Exponent> gens;
            for (const auto& g : c.at("generators")) gens.push_back(g.get<Exponent>());
            out.classes.push_back(CovariantClass::make(degree, gens));
        }
        // one conservation pass over every cached class re-verifies the hit
        out.matrix = matrix_over_classes(ws, out.classes);
        out.classes = out.matrix->classes;
        return out;
    } catch (const std::exception& e) {
        std::cerr << "note: ignoring cache entry " << file.string() << " (" << e.what() << ")\n";
        return std::nullopt;
    }
}

void store_cached(const Closure& c, const std::filesystem::path& file) {
    Json doc;
    doc["rounds"] = c.rounds;
    doc["classes"] = Json::array();
    for (const auto& cls : c.classes) {
        Json j;
        j["free"] = rational_vector(cls.degree.free_part);
        j["torsion"] = cls.degree.torsion_part;
        j["generators"] = cls.generators;
        doc["classes"].push_back(j);
    }
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    std::ofstream out(file);
    if (out) out << doc.dump(1) << '\n';
    if (!out) std::cerr << "note: could not write cache entry " << file.string() << '\n';
}

Closure closure_for(const RingSpec& spec, const Options& opt) {
    const auto& ws = *spec.diagonal;
    std::optional<std::filesystem::path> file;
    if (opt.cache_dir) {
        file = std::filesystem::path(*opt.cache_dir) / (spec.digest + ".closure.json");
        if (auto hit = load_cached(ws, *file)) return *hit;
    }
    auto r = closure_classes(ws, opt.budget);
    Closure out{r.classes, r.ffrt, r.rounds, std::nullopt};
    if (file && out.ffrt) store_cached(out, *file);
    return out;
}

ClassMatrix class_matrix(const RingSpec& spec, const Options& opt, Closure& closure) {
    if (!closure.ffrt) {
        fail(ErrorKind::NotFFRT, "closure did not stabilise within " + std::to_string(opt.budget) + " rounds");
    }
    if (!closure.matrix) closure.matrix = matrix_over_classes(*spec.diagonal, closure.classes);
    return *closure.matrix;
}

// Matrix data shared by ematrix and certify.
struct MatrixContext {
    MultiplicityMatrix matrix;
    Json classes = Json::array();
    std::optional<RankIdentity> rank_identity;
    bool ffrt = true;
};

MatrixContext matrix_context(const RingSpec& spec, const Options& opt) {
    MatrixContext ctx;
    if (spec.kind == RingSpec::Kind::Group) {
        auto gm = group_multiplicity_matrix(*spec.group);
        ctx.matrix = gm.matrix;
        auto degrees = spec.group->degrees();
        for (std::size_t k = 0; k < gm.irreducible_index.size(); ++k) {
            Json c;
            c["class"] = spec.group->table.labels[gm.irreducible_index[k]];
            c["dim"] = number(degrees[gm.irreducible_index[k]]);
            ctx.classes.push_back(c);
        }
        return ctx;
    }
    diagonal_of(spec, "this command");
    auto closure = closure_for(spec, opt);
    auto cm = class_matrix(spec, opt, closure);
    ctx.matrix = cm.matrix;
    for (const auto& c : cm.classes) ctx.classes.push_back(class_json(c));
    ctx.rank_identity = cm.rank_identity;
    return ctx;
}

const char* status_name(RankIdentity::Status s) {
    switch (s) {
        case RankIdentity::Status::Verified: return "verified";
        case RankIdentity::Status::Unchecked: return "unchecked";
        case RankIdentity::Status::Violated: return "violated";
    }
    return "?";
}

Json column_check(const MultiplicityMatrix& m, bool& ok) {
    Integer pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(m.p), static_cast<unsigned long>(m.dim));
    Json out = Json::array();
    ok = true;
    for (std::size_t j = 0; j < m.size(); ++j) {
        Integer sum = 0;
        for (std::size_t i = 0; i < m.size(); ++i) sum += m.entries[i][j] * m.ranks[i];
        Integer expected = pd * m.ranks[j];
        Json row;
        row["class"] = m.labels[j];
        row["weighted_column_sum"] = number(sum);
        row["expected"] = number(expected);
        row["equal"] = sum == expected;
        ok = ok && sum == expected;
        out.push_back(row);
    }
    return out;
}

unsigned digits_for(const Rational& tolerance) {
    if (tolerance <= 0) fail(ErrorKind::Input, "tolerance must be positive");
    unsigned digits = 1;
    Rational t = tolerance;
    while (t < 1 && digits < 40) {
        t *= 10;
        ++digits;
    }
    return digits;
}

Report cmd_decompose(const RingSpec& spec, const Options& opt) {
    Report r{header("decompose", spec)};
    if (opt.e < 1) fail(ErrorKind::Input, "--e must be at least 1");
    auto& d = r.data;
    d["e"] = opt.e;
    if (spec.kind == RingSpec::Kind::Group) {
        const auto& g = *spec.group;
        auto report = pushforward_multiplicities(g, opt.e);
        d["q"] = report.q;
        auto trunc = truncation_character(g.classes, report.q, g.m);
        auto twisted = frobenius_twist(trunc, opt.e, g.prime, g.m);
        Json classes = Json::array();
        for (std::size_t k = 0; k < g.classes.size(); ++k) {
            Json c;
            c["class_size"] = g.classes[k].class_size;
            c["truncation_character"] = trunc.values[k].to_string();
            c["twisted"] = twisted.values[k].to_string();
            classes.push_back(c);
        }
        d["conjugacy_classes"] = classes;
        Json rows = Json::array();
        auto degrees = g.degrees();
        Integer weighted = 0;
        for (std::size_t i = 0; i < report.multiplicities.size(); ++i) {
            Json row;
            row["covariant"] = "R(" + report.labels[i] + ")";
            row["dim"] = number(degrees[i]);
            row["multiplicity"] = number(report.multiplicities[i]);
            rows.push_back(row);
            weighted += report.multiplicities[i] * degrees[i];
        }
        d["summands"] = rows;
        Integer total;
        mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(report.q), static_cast<unsigned long>(g.dim));
        d["weighted_total"] = number(weighted);
        d["expected_total"] = number(total);
        if (weighted != total) fail(ErrorKind::InvariantViolation, "weighted multiplicities do not add up to q^dim");
        return r;
    }
    const auto& ws = diagonal_of(spec, "decompose");
    auto report = pushforward_decompose(ws, CovariantClass::base_ring(ws), opt.e);
    d["q"] = report.q;
    d["variables"] = ws.variables();
    d["convention"] = "the summand of degree chi is S_chi = R(L_-chi)";
    Json rows = Json::array();
    for (const auto& [key, entry] : report.entries) {
        Json row;
        row["class"] = describe_key(key);
        row["multiplicity"] = entry.multiplicity;
        Json degrees = Json::array();
        for (const auto& [deg, count] : entry.by_degree) degrees.push_back(describe_character(deg) + " x" + std::to_string(count));
        row["degrees"] = degrees;
        row["generators"] = generators_json(entry.representative.generators);
        rows.push_back(row);
    }
    d["summands"] = rows;
    d["zero_piece_count"] = report.zero_piece_count;
    d["total_pieces"] = report.total() + report.zero_piece_count;
    d["conservation"] = report.conserves() ? "holds" : "violated";
    if (!report.conserves()) r.exit_code = 3;
    return r;
}

Report cmd_closure(const RingSpec& spec, const Options& opt) {
    Report r{header("closure", spec)};
    auto& d = r.data;
    if (spec.kind == RingSpec::Kind::Group) {
        auto gm = group_multiplicity_matrix(*spec.group);
        d["verdict"] = "FFRT";
        Json classes = Json::array();
        for (auto i : gm.irreducible_index) classes.push_back("R(" + spec.group->table.labels[i] + ")");
        d["classes"] = classes;
        return r;
    }
    const auto& ws = diagonal_of(spec, "closure");
    auto closure = closure_for(spec, opt);
    d["budget"] = opt.budget;
    d["rounds"] = closure.rounds;
    d["verdict"] = closure.ffrt ? "FFRT" : "Inconclusive";
    Json classes = Json::array();
    for (const auto& c : closure.classes) classes.push_back(class_json(c));
    d["classes"] = classes;
    try {
        auto critical = strongly_critical_classes(ws);
        std::set<CanonicalKey> a, b;
        for (const auto& c : critical) a.insert(c.key);
        for (const auto& c : closure.classes) b.insert(c.key);
        Json check;
        Json list = Json::array();
        for (const auto& c : critical) {
            Json row;
            row["class"] = describe_key(c.key);
            row["character"] = describe_character(c.degree);
            list.push_back(row);
        }
        check["classes"] = list;
        check["agrees"] = a == b;
        d["strongly_critical"] = check;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        d["strongly_critical"] = "skipped: " + e.detail();
    }
    if (!closure.ffrt) r.exit_code = 2;
    return r;
}

Report cmd_ematrix(const RingSpec& spec, const Options& opt) {
    Report r{header("ematrix", spec)};
    auto& d = r.data;
    auto ctx = matrix_context(spec, opt);
    d["classes"] = ctx.classes;
    d["matrix"] = matrix_json(ctx.matrix.entries);
    d["ranks"] = numbers(ctx.matrix.ranks);
    d["dim"] = ctx.matrix.dim;
    bool ok = true;
    d["column_check"] = column_check(ctx.matrix, ok);
    if (ctx.rank_identity) {
        Json ri;
        ri["status"] = status_name(ctx.rank_identity->status);
        ri["lattice_torsion"] = numbers(ctx.rank_identity->torsion_factors);
        if (!ctx.rank_identity->diagnostic.empty()) ri["diagnostic"] = ctx.rank_identity->diagnostic;
        d["rank_identity"] = ri;
        if (ctx.rank_identity->status == RankIdentity::Status::Violated) r.exit_code = 3;
    } else if (!ok) {
        r.exit_code = 3;
    }
    return r;
}

Report cmd_certify(const RingSpec& spec, const Options& opt) {
    Report r{header("certify", spec)};
    auto& d = r.data;
    auto ctx = matrix_context(spec, opt);
    const auto& m = ctx.matrix;
    d["classes"] = ctx.classes;
    d["matrix"] = matrix_json(m.entries);
    d["ffrt"] = ctx.ffrt;

    auto u = primitivity(m.entries);
    Json prim;
    prim["exponent"] = u ? Json(*u) : Json(nullptr);
    prim["wielandt_bound"] = wielandt_bound(m.size());
    d["primitivity"] = prim;

    Json pj;
    if (u) {
        auto data = perron(m, opt.tolerance);
        const unsigned digits = digits_for(opt.tolerance);
        pj["lambda"] = number(data.lambda);
        pj["eigencheck"] = data.verified ? "w E = p^dim w holds exactly" : "failed";
        pj["left_eigenvector"] = numbers(data.left_eigenvector);
        pj["squarings"] = data.squarings;
        pj["tolerance"] = to_string(opt.tolerance);
        Json limit = Json::array();
        for (const auto& row : data.limit_matrix) {
            Json out = Json::array();
            for (const auto& x : row) out.push_back(to_decimal(x, static_cast<int>(digits)));
            limit.push_back(out);
        }
        pj["limit_matrix"] = limit;
    } else {
        pj["status"] = "not primitive; no limit is certified";
    }
    d["perron"] = pj;

    auto cert = sfr_positivity_certificate(m.entries, m.base_index);
    Json cj;
    cj["verdict"] = cert.certified ? "CertifiedPositivity" : "Failed";
    cj["exponent"] = cert.exponent;
    cj["meaning"] = "strong F-regularity forces this positivity pattern; it is a necessary condition only";
    d["sfr_certificate"] = cj;

    std::vector<Integer> dims = spec.division_dims;
    if (dims.empty()) dims.assign(m.size(), 1);
    if (dims.size() != m.size()) {
        fail(ErrorKind::Input, "division_dims lists " + std::to_string(dims.size()) + " entries for " +
                                   std::to_string(m.size()) + " classes");
    }
    std::vector<std::vector<Integer>> at_r;
    IntMatrix power_e = identity(m.size());
    for (unsigned e = 1; e <= spec.e_max; ++e) {
        power_e = multiply(power_e, m.entries);
        std::vector<Integer> col;
        for (std::size_t i = 0; i < m.size(); ++i) col.push_back(power_e[i][m.base_index]);
        at_r.push_back(col);
    }
    auto mf = min_findim_sequence(at_r, dims, u.has_value());
    Json mj;
    mj["sequence"] = numbers(mf.sequence);
    mj["running_sup"] = numbers(mf.running_sup);
    mj["verdict"] = mf.no_finite_dimensional_reps ? "no finite-dimensional D(R)-representations"
                                                  : "inconclusive";
    d["min_findim"] = mj;

    std::vector<Integer> mult, block_dims;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.entries[i][m.base_index] == 0) continue;
        mult.push_back(m.entries[i][m.base_index]);
        block_dims.push_back(dims[i]);
        labels.push_back(m.labels[i]);
    }
    auto blocks = semisimple_block_report(mult, block_dims, labels);
    Json bj;
    bj["endomorphisms_mod_radical"] = blocks.render();
    Json rows = Json::array();
    for (const auto& b : blocks.blocks) {
        Json row;
        row["class"] = b.label;
        row["multiplicity"] = number(b.multiplicity);
        row["division_dim"] = number(b.division_dim);
        row["simple_dim"] = number(b.simple_dim);
        row["maximal_ideal"] = b.maximal_ideal;
        rows.push_back(row);
    }
    bj["blocks"] = rows;
    d["block_report"] = bj;

    Json note;
    if (ctx.ffrt && cert.certified) {
        note["statement"] = "D(R) is a simple ring";
        note["status"] = "conditional: holds when R is strongly F-regular with "
                         "finite F-representation type; FFRT is verified here, strong F-regularity is not "
                         "(the certificate is a necessary condition)";
    } else {
        note["statement"] = "none";
        note["status"] = "hypotheses not met by the computed data";
    }
    d["simplicity_annotation"] = note;
    return r;
}

Report cmd_discriminant(const RingSpec& spec, const Options&) {
    Report r{header("discriminant", spec)};
    if (!spec.extension) fail(ErrorKind::Input, "discriminant needs an extension spec");
    const auto& ext = *spec.extension;
    auto& d = r.data;
    d["base_variables"] = ext.base_variables;
    d["basis"] = ext.basis;
    Json form = Json::array();
    for (const auto& row : trace_form(ext)) {
        Json out = Json::array();
        for (const auto& p : row) out.push_back(p.to_string(ext.base_variables));
        form.push_back(out);
    }
    d["trace_form"] = form;
    d["discriminant"] = discriminant(ext).to_string(ext.base_variables);
    return r;
}

Report cmd_order(const RingSpec& spec, const Options&) {
    Report r{header("order", spec)};
    if (!spec.op) fail(ErrorKind::Input, "order needs an operator spec");
    const auto& os = *spec.op;
    auto op = os.build();
    auto& d = r.data;
    d["variables"] = os.variables;
    d["window"] = os.window;
    d["degree_shift"] = op.shift();
    d["safe_degree"] = op.safe_degree();
    d["max_order"] = os.max_order;
    auto order = operator_order(op, os.max_order);
    d["order"] = order ? Json(*order) : Json(nullptr);
    d["verdict"] = order ? "order determined" : "inconclusive: no vanishing within max_order";
    Json checks = Json::array();
    const auto n = static_cast<std::int64_t>(os.variables.size());
    for (auto q : os.q_checks) {
        Json c;
        c["q"] = q;
        bool linear = is_rq_linear(op, q);
        c["rq_linear"] = linear;
        if (linear && order) {
            c["order_below_dq"] = *order < n * q;
            if (*order >= n * q) r.exit_code = 3;
        }
        if (order && q > *order && !linear) r.exit_code = 3;
        checks.push_back(c);
    }
    d["rq_checks"] = checks;
    if (!order && r.exit_code == 0) r.exit_code = 2;
    return r;
}

Report cmd_witness(const RingSpec& spec, const Options& opt) {
    Report r{header("witness", spec)};
    const auto& ws = diagonal_of(spec, "witness");
    auto c = opt.c ? opt.c : spec.witness_c;
    if (!c) fail(ErrorKind::Input, "witness needs --c or a [witness] c entry");
    if (c->size() != ws.variables()) fail(ErrorKind::Input, "c needs one exponent per variable");
    std::int64_t q_max = opt.q_max.value_or(ipow(ws.prime, 3));
    auto& d = r.data;
    d["c"] = to_string(*c);
    d["q_max"] = q_max;
    auto w = dsimplicity_witness_search(ws, *c, q_max);
    d["found"] = w.has_value();
    if (w) {
        d["q"] = w->q;
        d["residue"] = to_string(w->residue);
        d["summand_degree"] = describe_character(w->summand_degree);
        d["method"] = w->method;
        Json table = Json::array();
        for (const auto& row : w->table) {
            Json j;
            j["generator"] = to_string(row.generator);
            j["coefficient"] = row.coefficient;
            j["image"] = row.image ? Json(to_string(*row.image)) : Json("0");
            table.push_back(j);
        }
        d["images"] = table;
        std::int64_t size = 0;
        for (auto x : *c) size += 2 * x;
        const std::int64_t window = size + 2 * w->q + 2;
        bool ok = verify_witness(ws, *c, *w, window);
        Json replay;
        replay["window"] = window;
        replay["verified"] = ok;
        d["replay"] = replay;
        if (!ok) r.exit_code = 3;
    }
    Json cross;
    try {
        auto closure = closure_for(spec, opt);
        auto cm = class_matrix(spec, opt, closure);
        bool certified = sfr_positivity_certificate(cm.matrix.entries, cm.matrix.base_index).certified;
        cross["certificate"] = certified ? "CertifiedPositivity" : "Failed";
        cross["agrees"] = certified == w.has_value();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvariantViolation) throw;
        cross["certificate"] = std::string("unavailable: ") + e.detail();
    }
    d["certificate_cross_check"] = cross;
    if (!w && r.exit_code == 0) r.exit_code = 2;
    return r;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "none";
    if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
    return j.dump();
}

bool is_flat_array(const Json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return is_scalar(x); });
}

std::string cell_text(const Json& j) {
    if (is_scalar(j)) return scalar_text(j);
    if (is_flat_array(j)) {
        std::string out;
        for (const auto& x : j) out += (out.empty() ? "" : " ") + scalar_text(x);
        return out;
    }
    return j.dump();
}

void render(const Json& obj, std::ostringstream& out, const std::string& indent) {
    std::size_t width = 0;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (is_scalar(it.value()) || is_flat_array(it.value())) width = std::max(width, it.key().size());
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const auto& v = it.value();
        if (is_scalar(v) || is_flat_array(v)) {
            out << indent << it.key() << std::string(width - it.key().size(), ' ') << "  " << cell_text(v) << '\n';
            continue;
        }
        out << indent << it.key() << ":\n";
        if (v.is_object()) {
            render(v, out, indent + "  ");
            continue;
        }
        bool grid = std::all_of(v.begin(), v.end(), [](const Json& x) { return is_flat_array(x); });
        bool table = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); });
        if (grid && !v.empty()) {
            std::vector<std::vector<std::string>> cells;
            std::size_t cols = 0;
            for (const auto& row : v) {
                std::vector<std::string> r;
                for (const auto& x : row) r.push_back(scalar_text(x));
                cols = std::max(cols, r.size());
                cells.push_back(r);
            }
            std::vector<std::size_t> w(cols, 0);
            for (const auto& r : cells) {
                for (std::size_t k = 0; k < r.size(); ++k) w[k] = std::max(w[k], r[k].size());
            }
            for (const auto& r : cells) {
                out << indent << "  ";
                for (std::size_t k = 0; k < r.size(); ++k) {
                    out << (k ? "  " : "") << std::string(w[k] - r[k].size(), ' ') << r[k];
                }
                out << '\n';
            }
        } else if (table && !v.empty()) {
            std::vector<std::string> columns;
            for (const auto& row : v) {
                for (auto c = row.begin(); c != row.end(); ++c) {
                    if (std::find(columns.begin(), columns.end(), c.key()) == columns.end()) columns.push_back(c.key());
                }
            }
            std::vector<std::vector<std::string>> cells;
            cells.push_back(columns);
            for (const auto& row : v) {
                std::vector<std::string> r;
                for (const auto& c : columns) r.push_back(row.contains(c) ? cell_text(row.at(c)) : "");
                cells.push_back(r);
            }
            std::vector<std::size_t> w(columns.size(), 0);
            for (const auto& r : cells) {
                for (std::size_t k = 0; k < r.size(); ++k) w[k] = std::max(w[k], r[k].size());
            }
            for (const auto& r : cells) {
                std::string line = indent + "  ";
                for (std::size_t k = 0; k < r.size(); ++k) {
                    line += r[k];
                    if (k + 1 < r.size()) line += std::string(w[k] - r[k].size() + 2, ' ');
                }
                out << line << '\n';
            }
        } else {
            for (const auto& x : v) out << indent << "  " << cell_text(x) << '\n';
        }
    }
}

}  // namespace

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Input:
        case ErrorKind::NonIntegralMultiplicity:
        case ErrorKind::ZeroDiscriminant:
            return 1;
        case ErrorKind::BudgetExceeded:
        case ErrorKind::FrontierInconclusive:
        case ErrorKind::NotFFRT:
        case ErrorKind::NotPrimitive:
        case ErrorKind::WindowTooSmall:
        case ErrorKind::PresentationIncomplete:
            return 2;
        case ErrorKind::EigenCheckFailed:
        case ErrorKind::InvariantViolation:
            return 3;
    }
    return 3;
}

Report run_command(const std::string& command, const RingSpec& spec, const Options& options) {
    if (command == "decompose") return cmd_decompose(spec, options);
    if (command == "closure") return cmd_closure(spec, options);
    if (command == "ematrix") return cmd_ematrix(spec, options);
    if (command == "certify") return cmd_certify(spec, options);
    if (command == "discriminant") return cmd_discriminant(spec, options);
    if (command == "order") return cmd_order(spec, options);
    if (command == "witness") return cmd_witness(spec, options);
    fail(ErrorKind::Input, "unknown command '" + command + "'");
}

std::string render_machine(const Json& data) { return data.dump(2) + "\n"; }

std::string render_human(const Json& data) {
    std::ostringstream out;
    render(data, out, "");
    return out.str();
}

}  // namespace forge::cli
