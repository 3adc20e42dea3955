#include "pgrl/io.hpp"

#include <fstream>
#include <sstream>

namespace pgrl {

namespace {

// Lines of whitespace-separated integer tokens; blank lines come out empty.
std::vector<std::vector<uint64_t>> tokenize_lines(std::istream& in) {
    std::vector<std::vector<uint64_t>> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<uint64_t> tokens;
        std::string tok;
        while (ls >> tok) {
            try {
                size_t used = 0;
                unsigned long long v = std::stoull(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                tokens.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("not a nonnegative integer: '" + tok + "'");
            }
        }
        lines.push_back(std::move(tokens));
    }
    return lines;
}

Matrix read_matrix_block(const std::vector<std::vector<uint64_t>>& lines, size_t& pos,
                         uint64_t modulus, uint32_t rows, uint32_t cols) {
    Matrix m(modulus, rows, cols);
    for (uint32_t r = 0; r < rows; ++r, ++pos) {
        if (pos >= lines.size() || lines[pos].size() != cols) {
            throw ParseError("expected " + std::to_string(cols) + " entries in row " +
                             std::to_string(r));
        }
        for (uint32_t c = 0; c < cols; ++c) {
            uint64_t v = lines[pos][c];
            if (v >= modulus) {
                throw ParseError("entry " + std::to_string(v) + " is not reduced mod " +
                                 std::to_string(modulus));
            }
            m.set(r, c, v);
        }
    }
    return m;
}

void skip_blank(const std::vector<std::vector<uint64_t>>& lines, size_t& pos) {
    while (pos < lines.size() && lines[pos].empty()) ++pos;
}

} // namespace

std::vector<Matrix> parse_matrices(std::istream& in) {
    std::vector<std::vector<uint64_t>> lines = tokenize_lines(in);
    std::vector<Matrix> out;
    size_t pos = 0;
    skip_blank(lines, pos);
    while (pos < lines.size()) {
        if (lines[pos].size() != 3) {
            throw ParseError("matrix header must be 'p n m'");
        }
        uint64_t p = lines[pos][0];
        uint64_t rows = lines[pos][1], cols = lines[pos][2];
        if (p < 2 || rows < 1 || cols < 1 || rows > kMaxDim || cols > kMaxDim) {
            throw ParseError("matrix header out of range");
        }
        ++pos;
        out.push_back(read_matrix_block(lines, pos, p, static_cast<uint32_t>(rows),
                                        static_cast<uint32_t>(cols)));
        skip_blank(lines, pos);
    }
    if (out.empty()) throw ParseError("no matrices in input");
    return out;
}

std::vector<Matrix> parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_matrices(in);
}

VectorForm parse_form(std::istream& in) {
    std::vector<std::vector<uint64_t>> lines = tokenize_lines(in);
    size_t pos = 0;
    skip_blank(lines, pos);
    if (pos >= lines.size() || lines[pos].size() != 4) {
        throw ParseError("form header must be 'p r n k'");
    }
    uint64_t p = lines[pos][0];
    uint64_t r = lines[pos][1], n = lines[pos][2], k = lines[pos][3];
    if (r < 1 || n < 1 || k < 1 || n > kMaxDim) throw ParseError("form header out of range");
    ++pos;

    PrimeModulus prime(p);
    uint64_t modulus = 1;
    for (uint64_t i = 0; i < r; ++i) modulus *= p;

    std::vector<Matrix> upper;
    for (uint64_t c = 0; c < k; ++c) {
        skip_blank(lines, pos);
        Matrix block = read_matrix_block(lines, pos, modulus, static_cast<uint32_t>(n),
                                         static_cast<uint32_t>(n));
        upper.push_back(std::move(block));
    }
    skip_blank(lines, pos);
    if (pos != lines.size()) throw ParseError("trailing content after the form blocks");
    return VectorForm::from_upper(prime, static_cast<uint32_t>(r), static_cast<uint32_t>(n),
                                  static_cast<uint32_t>(k), upper);
}

VectorForm parse_form_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_form(in);
}

json matrix_to_json(const Matrix& m) {
    return json(m.entries());
}

json certificate_to_json(const MatAlgebra& alg, const ZeroIdealCertificate& cert) {
    const MatAlgebra& b = cert.output_basis;
    json steps = json::array();
    for (const StepRecord& s : cert.steps) {
        steps.push_back({{"i", s.index},
                         {"l", s.l},
                         {"x_index", s.x_index},
                         {"m", s.m},
                         {"dim_ker", s.dim_ker}});
    }
    json basis = json::array();
    for (const Matrix& m : b.basis()) basis.push_back(matrix_to_json(m));
    bool bound = cert.final_codim + cert.k <= alg.matrix_size();
    return {{"n", alg.matrix_size()},
            {"p", alg.modulus()},
            {"dim_A", alg.dim()},
            {"k", cert.k},
            {"steps", steps},
            {"dim_B", b.dim()},
            {"codim", cert.final_codim},
            {"checks",
             {{"ideal", is_ideal(b, alg)},
              {"square_zero", algebra_square(b).dim() == 0},
              {"bound", bound}}},
            {"basis_B", basis}};
}

ZeroIdealCertificate certificate_from_json(const json& j) {
    try {
        uint32_t n = j.at("n").get<uint32_t>();
        uint64_t p = j.at("p").get<uint64_t>();
        std::vector<Matrix> basis;
        for (const json& row : j.at("basis_B")) {
            basis.push_back(unvectorize(p, n, row.get<Vec>()));
        }
        ZeroIdealCertificate cert{{},
                                  MatAlgebra::from_span(p, n, basis),
                                  j.at("k").get<uint32_t>(),
                                  j.at("codim").get<uint32_t>()};
        for (const json& s : j.at("steps")) {
            cert.steps.push_back({s.at("i").get<uint32_t>(), s.at("l").get<uint32_t>(),
                                  s.at("x_index").get<uint32_t>(), s.at("m").get<uint32_t>(),
                                  s.at("dim_ker").get<uint32_t>()});
        }
        return cert;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
}

json form_to_json(const VectorForm& form) {
    json mats = json::array();
    for (const Matrix& m : form.mats) mats.push_back(matrix_to_json(m));
    return {{"p", form.p}, {"r", form.r}, {"n", form.n}, {"k", form.k}, {"mats", mats}};
}

json subspace_to_json(const Subspace& s) {
    json rows = json::array();
    for (uint32_t r = 0; r < s.dim(); ++r) rows.push_back(json(s.basis_row(r)));
    return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", rows}};
}

json report_to_json(const BuilderReport& report) {
    json checks = json::array();
    for (const Expectation& e : report.checks) {
        checks.push_back(
            {{"name", e.name}, {"expected", e.expected}, {"measured", e.measured}, {"ok", e.ok}});
    }
    return {{"builder", report.builder},
            {"params", report.params},
            {"checks", checks},
            {"measurements", report.measurements},
            {"ok", report.ok()}};
}

json ranks_to_json(const SmallGroupRanks& ranks) {
    return {{"r", ranks.r}, {"nr", ranks.nr}, {"sr", ranks.sr}};
}

json bound_table_to_json(const BoundTable& table) {
    json entries = json::array();
    for (const BoundEntry& e : table.entries) {
        entries.push_back({{"name", e.name},
                           {"num", e.value.num},
                           {"den", e.value.den},
                           {"value", e.value.to_string()},
                           {"floor", e.value.floor()}});
    }
    json out = {{"k", table.k},
                {"entries", entries},
                {"chain", {{"checked", table.chain_checked}, {"ok", table.chain_ok}}}};
    if (table.n) out["n"] = *table.n;
    return out;
}

json search_report_to_json(const FormSearchReport& report) {
    json hist = json::object();
    for (auto [dim, count] : report.dim_histogram) hist[std::to_string(dim)] = count;
    json out = {{"n", report.n},
                {"k", report.k},
                {"p", report.p},
                {"trials_requested", report.trials_requested},
                {"trials_run", report.trials_run},
                {"seed", report.seed},
                {"success", report.success},
                {"dim_histogram", hist}};
    out["best_dim"] = report.best_dim ? json(*report.best_dim) : json(nullptr);
    out["best_form"] = report.best_form ? form_to_json(*report.best_form) : json(nullptr);
    return out;
}

} // namespace pgrl
