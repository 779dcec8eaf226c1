#include "mf/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace mf {

namespace {

std::vector<Simplex> parse_lines(std::istream& in, bool allow_empty) {
    std::vector<Simplex> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::vector<int> verts;
        std::string tok;
        while (tokens >> tok) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                throw ParseError(lineno, "invalid vertex id '" + tok + "'");
            }
            if (used != tok.size()) throw ParseError(lineno, "invalid vertex id '" + tok + "'");
            if (v < 0) throw ParseError(lineno, "negative vertex id '" + tok + "'");
            if (v > std::numeric_limits<int>::max())
                throw ParseError(lineno, "vertex id out of range '" + tok + "'");
            verts.push_back(static_cast<int>(v));
        }
        if (verts.empty()) continue;  // blank or comment-only line
        try {
            out.emplace_back(std::move(verts));
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (out.empty() && !allow_empty) throw ParseError(lineno, "no simplexes in input");
    return out;
}

}  // namespace

std::vector<Simplex> parse_face_list(std::istream& in) { return parse_lines(in, true); }

std::vector<Simplex> parse_face_list(const std::string& text) {
    std::istringstream in(text);
    return parse_face_list(in);
}

std::shared_ptr<const Complex> load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return std::make_shared<const Complex>(Complex::closure(parse_face_list(in)));
}

Chain parse_chain(std::istream& in) {
    std::vector<Simplex> members = parse_lines(in, true);
    return Chain(std::move(members));
}

Chain load_chain(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_chain(in);
}

std::string to_text(const MorseSequence& W) {
    std::string out;
    for (const MorseStep& step : W.steps()) {
        if (step.is_regular())
            out += "R " + step.sigma.str() + " | " + step.tau->str() + "\n";
        else
            out += "C " + step.sigma.str() + "\n";
    }
    return out;
}

std::string to_text(const Frame& F) {
    const Complex& K = F.complex();
    std::string out;
    for (int p = 0; p <= K.dimension(); ++p)
        for (const Simplex& s : K.simplexes(p))
            out += s.str() + " : " + F.at(s).str() + "\n";
    return out;
}

std::string to_text(const MorseComplex& M) {
    std::string out;
    for (int p = 0; p <= M.dimension(); ++p) {
        out += "dim " + std::to_string(p) + "\n";
        for (std::size_t j = 0; j < M.critical[p].size(); ++j)
            out += (M.dual ? "d* " : "d ") + M.critical[p][j].str() + " : " +
                   M.diff[p][j].str() + "\n";
    }
    return out;
}

namespace {

nlohmann::json simplex_json(const Simplex& s) { return nlohmann::json(s.vertices()); }

Simplex simplex_from_json(const nlohmann::json& j) {
    return Simplex(j.get<std::vector<int>>());
}

nlohmann::json chain_json(const Chain& c) {
    nlohmann::json out = nlohmann::json::array();
    for (const Simplex& s : c.members()) out.push_back(simplex_json(s));
    return out;
}

Chain chain_from_json(const nlohmann::json& j) {
    std::vector<Simplex> members;
    for (const auto& s : j) members.push_back(simplex_from_json(s));
    return Chain(std::move(members));
}

}  // namespace

nlohmann::json to_json(const MorseSequence& W) {
    nlohmann::json steps = nlohmann::json::array();
    for (const MorseStep& step : W.steps()) {
        nlohmann::json s;
        if (step.is_regular()) {
            s["sigma"] = simplex_json(step.sigma);
            s["tau"] = simplex_json(*step.tau);
        } else {
            s["critical"] = simplex_json(step.sigma);
        }
        steps.push_back(std::move(s));
    }
    nlohmann::json counts = nlohmann::json::array();
    for (std::size_t c : critical_counts(W)) counts.push_back(c);
    return nlohmann::json{{"steps", std::move(steps)},
                          {"critical_counts", std::move(counts)}};
}

MorseSequence sequence_from_json(const nlohmann::json& j) {
    std::vector<MorseStep> steps;
    std::vector<Simplex> all;
    for (const auto& s : j.at("steps")) {
        if (s.contains("critical")) {
            steps.push_back(MorseStep::critical(simplex_from_json(s.at("critical"))));
            all.push_back(steps.back().sigma);
        } else {
            steps.push_back(MorseStep::regular(simplex_from_json(s.at("sigma")),
                                               simplex_from_json(s.at("tau"))));
            all.push_back(steps.back().sigma);
            all.push_back(*steps.back().tau);
        }
    }
    auto K = std::make_shared<const Complex>(Complex::from_simplexes(std::move(all)));
    return MorseSequence(std::move(K), std::move(steps));
}

nlohmann::json to_json(const Frame& F) {
    const Complex& K = F.complex();
    nlohmann::json entries = nlohmann::json::array();
    for (int p = 0; p <= K.dimension(); ++p)
        for (const Simplex& s : K.simplexes(p))
            entries.push_back(nlohmann::json{{"simplex", simplex_json(s)},
                                             {"chain", chain_json(F.at(s))}});
    return nlohmann::json{{"entries", std::move(entries)}};
}

Frame frame_from_json(const nlohmann::json& j) {
    std::vector<Simplex> all;
    for (const auto& e : j.at("entries")) all.push_back(simplex_from_json(e.at("simplex")));
    auto K = std::make_shared<const Complex>(Complex::from_simplexes(std::move(all)));
    Frame F(K);
    for (const auto& e : j.at("entries"))
        F.set(simplex_from_json(e.at("simplex")), chain_from_json(e.at("chain")));
    return F;
}

nlohmann::json to_json(const MorseComplex& M) {
    nlohmann::json dims = nlohmann::json::array();
    for (int p = 0; p <= M.dimension(); ++p) {
        nlohmann::json level;
        level["p"] = p;
        nlohmann::json crit = nlohmann::json::array();
        for (const Simplex& s : M.critical[p]) crit.push_back(simplex_json(s));
        level["critical"] = std::move(crit);
        nlohmann::json diffs = nlohmann::json::array();
        for (const Chain& c : M.diff[p]) diffs.push_back(chain_json(c));
        level[M.dual ? "d_star" : "d"] = std::move(diffs);
        // dense 0/1 matrix, rows indexed by the adjacent dimension
        std::size_t nrows = 0;
        int q = M.dual ? p + 1 : p - 1;
        if (q >= 0 && q <= M.dimension()) nrows = M.critical[q].size();
        nlohmann::json matrix = nlohmann::json::array();
        for (std::size_t r = 0; r < nrows; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < M.critical[p].size(); ++c)
                row.push_back(M.diff[p][c].contains(M.critical[q][r]) ? 1 : 0);
            matrix.push_back(std::move(row));
        }
        level["matrix"] = std::move(matrix);
        dims.push_back(std::move(level));
    }
    return nlohmann::json{{"dims", std::move(dims)}};
}

}  // namespace mf
