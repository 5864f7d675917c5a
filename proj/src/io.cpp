#include "maxplus/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "maxplus/errors.hpp"
#include "maxplus/ranks.hpp"
#include "maxplus/semigroup.hpp"
#include "maxplus/spectral.hpp"
#include "maxplus/ultimate.hpp"

namespace maxplus::io {

namespace {

struct Token {
    std::string text;
    int line, col;
};

class Tokenizer {
public:
    explicit Tokenizer(std::istream& in) : in_(in) {}

    // leading comment lines only; called once before the header
    void skip_comments() {
        while (in_.peek() == '#') {
            std::string dump;
            std::getline(in_, dump);
            ++line_;
            col_ = 1;
        }
    }

    std::optional<Token> next() {
        char c;
        while (in_.get(c)) {
            if (c == '\n') {
                ++line_;
                col_ = 1;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                continue;
            }
            Token t{{c}, line_, col_};
            ++col_;
            while (in_.get(c)) {
                if (std::isspace(static_cast<unsigned char>(c))) {
                    in_.putback(c);
                    break;
                }
                t.text.push_back(c);
                ++col_;
            }
            return t;
        }
        return std::nullopt;
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    std::istream& in_;
    int line_ = 1, col_ = 1;
};

int parse_dimension(const Tokenizer& tz, const std::optional<Token>& t,
                    const char* what) {
    if (!t) throw parse_error(std::string("missing ") + what, tz.line(), tz.col());
    try {
        std::size_t pos = 0;
        int value = std::stoi(t->text, &pos);
        if (pos != t->text.size() || value <= 0)
            throw std::invalid_argument("bad");
        return value;
    } catch (const std::exception&) {
        throw parse_error(std::string("expected positive integer ") + what +
                              ", got '" + t->text + "'",
                          t->line, t->col);
    }
}

Trop parse_entry(const Token& t) {
    if (t.text == "-inf" || t.text == ".") return Trop::bottom();
    if (auto r = Rat::parse(t.text)) return Trop(*r);
    throw parse_error("invalid entry '" + t.text + "'", t.line, t.col);
}

} // namespace

Matrix read_matrix(std::istream& in) {
    Tokenizer tz(in);
    tz.skip_comments();
    auto rows_tok = tz.next();
    int rows = parse_dimension(tz, rows_tok, "row count");
    auto cols_tok = tz.next();
    int cols = parse_dimension(tz, cols_tok, "column count");

    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            auto t = tz.next();
            if (!t)
                throw parse_error("matrix ends early: expected " +
                                      std::to_string(rows) + "x" + std::to_string(cols) +
                                      " entries",
                                  tz.line(), tz.col());
            m(i, j) = parse_entry(*t);
        }
    if (auto extra = tz.next())
        throw parse_error("unexpected trailing token '" + extra->text + "'",
                          extra->line, extra->col);
    return m;
}

Matrix read_matrix_file(const std::string& path) {
    if (path == "-") return read_matrix(std::cin);
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "'", 0, 0);
    return read_matrix(f);
}

void write_matrix(std::ostream& out, const Matrix& a) {
    out << a.rows() << ' ' << a.cols() << '\n';
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (j) out << ' ';
            out << a(i, j).str();
        }
        out << '\n';
    }
}

std::string matrix_to_string(const Matrix& a) {
    std::ostringstream ss;
    write_matrix(ss, a);
    return ss.str();
}

namespace {

void put_scalar(Report& r, const std::string& key, const Trop& t) {
    r[key] = t.str();
    if (t.is_finite())
        if (auto dec = t.rat().decimal_str()) r[key + "_decimal"] = *dec;
}

Report vector_json(const Vector& v) {
    Report arr = Report::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v[i].str());
    return arr;
}

Report ranks_json(const RankReport& r) {
    Report j;
    j["column_rank"] = r.column_rank;
    j["row_rank"] = r.row_rank;
    if (r.tropical_rank)
        j["tropical_rank"] = *r.tropical_rank;
    else
        j["tropical_rank"] = "not computed (size cap)";
    if (r.symmetrized_rank)
        j["symmetrized_rank"] = *r.symmetrized_rank;
    else
        j["symmetrized_rank"] = "not computed (size cap)";
    j["brute_cap"] = r.brute_cap;
    return j;
}

} // namespace

Report report_spectral(const Matrix& a) {
    SpectralData s = spectral(a);
    Report r;
    r["command"] = "spectral";
    r["rows"] = a.rows();
    r["cols"] = a.cols();
    put_scalar(r, "rho", s.rho);
    r["acyclic"] = s.rho.is_bottom();

    Report nodes = Report::array();
    for (int v : s.critical_nodes) nodes.push_back(v + 1);
    r["critical_nodes"] = std::move(nodes);

    Report arcs = Report::array();
    std::vector<std::pair<int, int>> arc_list;
    for (int v = 0; v < s.critical_graph.node_count(); ++v)
        for (const Arc& arc : s.critical_graph.out(v)) arc_list.emplace_back(v, arc.to);
    std::sort(arc_list.begin(), arc_list.end());
    for (const auto& [i, j] : arc_list) arcs.push_back(Report::array({i + 1, j + 1}));
    r["critical_arcs"] = std::move(arcs);

    Report comps = Report::array();
    for (int c : s.critical_components) {
        Report comp = Report::array();
        for (int v : s.critical_scc.components[static_cast<std::size_t>(c)])
            comp.push_back(v + 1);
        comps.push_back(std::move(comp));
    }
    r["critical_scc"] = std::move(comps);
    r["cyclicities"] = s.cyclicities;

    if (s.rho.is_bottom()) {
        r["eigenvalue"] = "-inf";
        r["eigenbasis"] = nullptr;
    } else {
        EigenBasis basis = eigen_basis(a);
        put_scalar(r, "eigenvalue", basis.eigenvalue);
        Report gens = Report::array();
        for (const Vector& v : basis.generators) gens.push_back(vector_json(v));
        r["eigenbasis"] = std::move(gens);
    }
    return r;
}

Report report_ranks(const Matrix& a, int brute_cap) {
    Report r;
    r["command"] = "ranks";
    r["rows"] = a.rows();
    r["cols"] = a.cols();
    r.update(ranks_json(rank_report(a, brute_cap)));
    if (a.is_square()) {
        PermanentCertificate cert = permanent(a);
        put_scalar(r, "permanent", cert.permanent);
        r["singular"] = cert.singular;
        if (cert.tau) {
            Report tau = Report::array();
            for (int t : *cert.tau) tau.push_back(t + 1);
            r["tau"] = std::move(tau);
        }
    }
    return r;
}

Report report_urank(const Matrix& a, bool with_oracle, long max_steps) {
    UltimateRankResult ur = ultimate_rank(a);
    Report r;
    r["command"] = "urank";
    r["n"] = a.rows();
    r["ultimate_rank"] = ur.value;
    r["critical_scc_count"] = ur.critical_scc_count;
    r["cyclicities"] = ur.per_scc_cyclicities;
    r["acyclic"] = ur.acyclic;
    r["max_rank"] = (!a.is_null() && has_max_ultimate_rank(a).is_max);
    if (with_oracle) {
        Report o;
        UltimateRankOracle result = ultimate_rank_oracle(a, max_steps);
        if (result.status == UltimateRankOracle::Status::closed) {
            o["status"] = "closed";
            o["value"] = *result.value;
            o["preperiod"] = result.preperiod;
            o["period"] = result.period;
            o["matches_formula"] = (*result.value == ur.value);
        } else {
            o["status"] = result.torsion_hypothesis
                              ? "inconclusive (budget exhausted)"
                              : "inconclusive (non-torsion)";
            if (result.truncated_column_rank)
                o["truncated_column_rank"] = *result.truncated_column_rank;
        }
        r["oracle"] = std::move(o);
    }
    return r;
}

Report report_semigroup(const std::vector<Matrix>& generators,
                        std::optional<int> oracle_len) {
    GeneratorSet g = GeneratorSet::make(generators);
    SemigroupDecision d = decide_max_ultimate_rank(g);

    Report r;
    r["command"] = "semigroup";
    r["n"] = g.dim();
    r["generators"] = g.size();
    r["verdict"] = d.verdict;

    Report c1;
    c1["ok"] = d.c1.ok;
    if (!d.c1.ok) {
        c1["offender_generator"] = d.c1.offender;
        c1["offender_ultimate_rank"] = d.c1.offender_urk;
    }
    r["c1"] = std::move(c1);

    Report c2;
    c2["evaluated"] = d.c2.evaluated;
    if (d.c2.evaluated) {
        c2["ok"] = d.c2.ok;
        put_scalar(c2, "rho_envelope", d.c2.rho_envelope);
    }
    r["c2"] = std::move(c2);

    Report c3;
    c3["evaluated"] = d.c3.evaluated;
    if (d.c3.evaluated) {
        c3["ok"] = d.c3.ok;
        if (!d.c3.ok) {
            c3["offender_generator"] = d.c3.offender_generator;
            c3["offender_arc"] =
                Report::array({d.c3.offender_arc.first, d.c3.offender_arc.second});
        }
    }
    r["c3"] = std::move(c3);

    if (d.witness_eigenvector)
        r["witness_eigenvector"] = vector_json(*d.witness_eigenvector);
    else
        r["witness_eigenvector"] = nullptr;

    if (oracle_len) {
        SemigroupOracleReport o = semigroup_oracle(g, *oracle_len);
        Report oj;
        oj["max_len"] = o.max_len;
        oj["products_checked"] = o.products_checked;
        oj["budget_exceeded"] = o.budget_exceeded;
        oj["not_maximal"] = o.not_maximal;
        if (o.witness_product) {
            oj["witness_product"] = *o.witness_product;
            oj["witness_ultimate_rank"] = *o.witness_urk;
        }
        oj["agrees_with_decision"] = o.agrees;
        r["oracle"] = std::move(oj);
    }
    return r;
}

Report report_powers(const Matrix& a, long max_steps, int trace) {
    OrbitReport orbit = power_orbit(a, max_steps);
    Report r;
    r["command"] = "powers";
    r["n"] = a.rows();
    put_scalar(r, "rho", max_cycle_mean(a));
    r["closed"] = orbit.closed;
    if (orbit.closed) {
        r["preperiod"] = orbit.preperiod;
        r["period"] = orbit.period;
    }
    r["steps_computed"] = orbit.steps;

    Report tr = Report::array();
    int upto = std::min<int>(trace, static_cast<int>(orbit.normalized.size()));
    for (int w = 1; w <= upto; ++w) {
        RankReport ranks = rank_report(orbit.normalized[static_cast<std::size_t>(w) - 1], 7);
        Report e;
        e["w"] = w;
        e.update(ranks_json(ranks));
        e.erase("brute_cap");
        tr.push_back(std::move(e));
    }
    r["rank_trace"] = std::move(tr);
    return r;
}

namespace {

void print_kv(std::ostream& out, const std::string& key, const Report& v) {
    out << "  " << key << ": ";
    if (v.is_string())
        out << v.get<std::string>();
    else
        out << v.dump();
    out << '\n';
}

} // namespace

void print_human(const Report& report, std::ostream& out) {
    std::string cmd = report.value("command", "");
    out << cmd << " report\n";
    for (const auto& [key, value] : report.items()) {
        if (key == "command") continue;
        if (key == "rank_trace" && value.is_array()) {
            out << "  rank trace (w: col row tropical symmetrized):\n";
            for (const auto& e : value) {
                out << "    " << e.value("w", 0) << ": " << e["column_rank"].dump()
                    << ' ' << e["row_rank"].dump() << ' ' << e["tropical_rank"].dump()
                    << ' ' << e["symmetrized_rank"].dump() << '\n';
            }
            continue;
        }
        print_kv(out, key, value);
    }
}

} // namespace maxplus::io
