#include "exactsdp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "exactsdp/errors.hpp"

namespace exactsdp {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& v, const std::string& where) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number_unsigned()) return Rational(v.get<unsigned long>());
    if (v.is_number_float())
        throw ParseError(where + ": floating-point literals are rejected, write an exact "
                                 "rational string such as \"1/2\"");
    throw ParseError(where + ": expected a rational written as \"p/q\" or an integer");
}

json rational_to_json(const Rational& x) { return to_string(x); }

SymMatrix sym_from_json(const json& v, std::size_t n, const std::string& where) {
    if (!v.is_array() || v.size() != n)
        throw ParseError(where + ": expected " + std::to_string(n) + " rows");
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = v[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError(where + " row " + std::to_string(i + 1) + ": expected " +
                             std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = rational_from_json(
                row[j], where + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
    }
    try {
        return SymMatrix::from_matrix(m);
    } catch (const ValidationError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

json sym_to_json(const SymMatrix& x) {
    json rows = json::array();
    for (std::size_t i = 0; i < x.order(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < x.order(); ++j) row.push_back(rational_to_json(x.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::size_t size_from_json(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    const json& v = doc[key];
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
        throw ParseError(std::string("key '") + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

SdpProblem parse_instance_json(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("instance document must be a JSON object");

    static const char* known[] = {"n", "m", "C", "A", "b", "X0", "r", "R", "epsilon",
                                  "name", "comment"};
    for (const auto& [key, value] : doc.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ParseError("unknown instance key '" + key + "'");
    }

    SdpProblem p;
    p.n = size_from_json(doc, "n");
    p.m = size_from_json(doc, "m");
    if (!doc.contains("C") || !doc.contains("A") || !doc.contains("b") || !doc.contains("X0") ||
        !doc.contains("r") || !doc.contains("R") || !doc.contains("epsilon"))
        throw ParseError("instance requires keys n, m, C, A, b, X0, r, R, epsilon");

    p.C = sym_from_json(doc["C"], p.n, "C");
    if (!doc["A"].is_array() || doc["A"].size() != p.m)
        throw ParseError("A: expected a list of m = " + std::to_string(p.m) + " matrices");
    for (std::size_t j = 0; j < p.m; ++j)
        p.A.push_back(sym_from_json(doc["A"][j], p.n, "A[" + std::to_string(j + 1) + "]"));
    if (!doc["b"].is_array() || doc["b"].size() != p.m)
        throw ParseError("b: expected m = " + std::to_string(p.m) + " entries");
    for (std::size_t j = 0; j < p.m; ++j)
        p.b.push_back(rational_from_json(doc["b"][j], "b[" + std::to_string(j + 1) + "]"));
    p.X0 = sym_from_json(doc["X0"], p.n, "X0");
    p.r = rational_from_json(doc["r"], "r");
    p.R = rational_from_json(doc["R"], "R");
    p.epsilon = rational_from_json(doc["epsilon"], "epsilon");
    return p;
}

SdpProblem load_instance(const std::string& path) {
    return parse_instance_json(read_text_file(path));
}

std::string instance_to_json(const SdpProblem& p) {
    json doc;
    doc["n"] = p.n;
    doc["m"] = p.m;
    doc["C"] = sym_to_json(p.C);
    json a = json::array();
    for (const SymMatrix& aj : p.A) a.push_back(sym_to_json(aj));
    doc["A"] = std::move(a);
    json b = json::array();
    for (const Rational& bj : p.b) b.push_back(rational_to_json(bj));
    doc["b"] = std::move(b);
    doc["X0"] = sym_to_json(p.X0);
    doc["r"] = rational_to_json(p.r);
    doc["R"] = rational_to_json(p.R);
    doc["epsilon"] = rational_to_json(p.epsilon);
    return doc.dump(2) + "\n";
}

namespace {

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::degenerate_objective: return "degenerate-objective";
        case SolveStatus::phase1_complete: return "phase1-complete";
        case SolveStatus::iteration_limit: return "iteration-limit";
    }
    return "unknown";
}

}  // namespace

SolutionDoc make_solution_doc(const SolveResult& result) {
    SolutionDoc doc;
    doc.status = status_name(result.status);
    doc.X_star = result.x.X;
    doc.objective = result.objective;
    doc.gap_bound = result.gap_bound;
    doc.eps_bar = result.eps_bar;
    doc.iterations_phase1 = result.iterations_phase1;
    doc.iterations_phase2 = result.iterations_phase2;
    return doc;
}

std::string solution_to_json(const SolutionDoc& doc) {
    json j;
    j["status"] = doc.status;
    j["X_star"] = sym_to_json(doc.X_star);
    j["objective"] = rational_to_json(doc.objective);
    j["gap_bound"] = rational_to_json(doc.gap_bound);
    j["eps_bar"] = rational_to_json(doc.eps_bar);
    j["iterations"] = {{"phase1", doc.iterations_phase1}, {"phase2", doc.iterations_phase2}};
    return j.dump(2) + "\n";
}

SolutionDoc parse_solution_json(const std::string& text) {
    const json j = parse_document(text);
    if (!j.is_object()) throw ParseError("solution document must be a JSON object");
    for (const char* key : {"status", "X_star", "objective", "gap_bound", "eps_bar", "iterations"})
        if (!j.contains(key)) throw ParseError(std::string("solution is missing key '") + key + "'");
    SolutionDoc doc;
    doc.status = j["status"].get<std::string>();
    if (!j["X_star"].is_array() || j["X_star"].empty())
        throw ParseError("X_star: expected a nonempty matrix");
    doc.X_star = sym_from_json(j["X_star"], j["X_star"].size(), "X_star");
    doc.objective = rational_from_json(j["objective"], "objective");
    doc.gap_bound = rational_from_json(j["gap_bound"], "gap_bound");
    doc.eps_bar = rational_from_json(j["eps_bar"], "eps_bar");
    doc.iterations_phase1 = j["iterations"].value("phase1", 0L);
    doc.iterations_phase2 = j["iterations"].value("phase2", 0L);
    return doc;
}

SolutionDoc load_solution(const std::string& path) {
    return parse_solution_json(read_text_file(path));
}

void verify_solution(const Model& model, const SolutionDoc& doc) {
    const SdpProblem& p = model.problem();
    if (doc.X_star.order() != p.n)
        throw ValidationError("X_star has order " + std::to_string(doc.X_star.order()) +
                              ", instance has n = " + std::to_string(p.n));
    const std::vector<Rational> image = model.ops().apply(doc.X_star);
    for (std::size_t j = 0; j < p.m; ++j)
        if (image[j] != p.b[j])
            throw ValidationError("feasibility residual nonzero at constraint " +
                                  std::to_string(j + 1) + ": <A, X_star> = " +
                                  to_string(image[j]) + ", b = " + to_string(p.b[j]));
    if (PdCheck pd = ldl_pd_check(doc.X_star); !pd)
        throw ValidationError("X_star is not positive definite: pivot " +
                              std::to_string(pd.pivot_index) + " is " +
                              to_string(pd.pivot_value));
    const Rational objective = inner(p.C, doc.X_star);
    if (objective != doc.objective)
        throw ValidationError("stated objective " + to_string(doc.objective) +
                              " differs from the exact value " + to_string(objective));
}

std::string trace_to_lines(std::span<const TraceRecord> trace) {
    std::string out;
    for (const TraceRecord& rec : trace) {
        json j;
        j["k"] = rec.k;
        j["phase"] = rec.phase;
        j["eta"] = rational_to_json(rec.eta);
        j["coord_bits"] = rec.coord_bits;
        j["matrix_bits"] = rec.matrix_bits;
        j["loop_top_proximity_sq"] = rational_to_json(rec.loop_top_proximity_sq);
        j["proximity_sq"] = rational_to_json(rec.proximity_sq);
        j["rounded"] = rec.rounded;
        j["eps_bar_used"] = rational_to_json(rec.eps_bar_used);
        out += j.dump();
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw ParseError("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace exactsdp
