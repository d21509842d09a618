#include "csph/io.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace csph::io {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const Complex& a, int n) {
    if (n < 0)
        throw precondition_error("to_json: ambient n must be >= 0");
    ordered_json j;
    j["format_version"] = "1";
    j["kind"] = a.is_void() ? "void" : "nonvoid";
    j["n"] = n;
    j["dim"] = a.is_void() ? -1 : a.dim();
    ordered_json facets = ordered_json::array();
    for (const Face& f : a.facets()) {
        for (Vertex v : f.vertices())
            if (v < -n || v > n)
                throw precondition_error("to_json: vertex " + std::to_string(v) +
                                         " outside the ambient V_" + std::to_string(n));
        facets.push_back(f.vertices());
    }
    j["facets"] = std::move(facets);
    return j.dump();
}

namespace {

const char* const kKeys[] = {"format_version", "kind", "n", "dim", "facets"};

void require_canonical_keys(const ordered_json& j) {
    if (!j.is_object())
        throw parse_error("document root is not an object");
    std::size_t pos = 0;
    for (const auto& item : j.items()) {
        if (pos >= 5 || item.key() != kKeys[pos])
            throw parse_error("unexpected or misplaced key \"" + item.key() +
                              "\" at position " + std::to_string(pos));
        ++pos;
    }
    if (pos != 5)
        throw parse_error("document has " + std::to_string(pos) + " keys, expected 5");
}

}  // namespace

ParsedComplex from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what());
    }
    require_canonical_keys(j);

    if (!j["format_version"].is_string() || j["format_version"] != "1")
        throw parse_error("unsupported format_version");
    if (!j["n"].is_number_integer())
        throw parse_error("\"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (n < 0) throw parse_error("\"n\" must be >= 0");
    if (!j["dim"].is_number_integer())
        throw parse_error("\"dim\" must be an integer");
    const int dim = j["dim"].get<int>();
    if (!j["facets"].is_array())
        throw parse_error("\"facets\" must be an array");

    const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    if (kind == "void") {
        if (!j["facets"].empty())
            throw parse_error("void complex with a nonempty facet list");
        if (dim != -1)
            throw parse_error("void complex must have dim -1");
        return {Complex::void_complex(), n};
    }
    if (kind != "nonvoid")
        throw parse_error("\"kind\" must be \"void\" or \"nonvoid\"");
    if (j["facets"].empty())
        throw parse_error("nonvoid complex with an empty facet list");

    std::vector<Face> facets;
    facets.reserve(j["facets"].size());
    for (std::size_t fi = 0; fi < j["facets"].size(); ++fi) {
        const ordered_json& arr = j["facets"][fi];
        const std::string at = "facets[" + std::to_string(fi) + "]";
        if (!arr.is_array()) throw parse_error(at + ": not an array");
        std::vector<Vertex> verts;
        verts.reserve(arr.size());
        for (const auto& e : arr) {
            if (!e.is_number_integer()) throw parse_error(at + ": non-integer vertex");
            const long long v = e.get<long long>();
            if (v == 0) throw parse_error(at + ": vertex id 0");
            if (v < -n || v > n)
                throw parse_error(at + ": vertex " + std::to_string(v) +
                                  " outside the ambient V_" + std::to_string(n));
            verts.push_back(static_cast<Vertex>(v));
        }
        for (std::size_t i = 1; i < verts.size(); ++i)
            if (verts[i - 1] >= verts[i])
                throw parse_error(at + ": vertices not in strictly ascending order");
        facets.push_back(Face::from_sorted(std::move(verts)));
        if (fi > 0 && !(facets[fi - 1] < facets[fi]))
            throw parse_error(at + ": facet list not in canonical order");
    }
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t k = 0; k < facets.size(); ++k)
            if (i != k && facets[k].contains_face(facets[i]))
                throw parse_error("facets[" + std::to_string(i) + "]: not maximal");

    Complex c = Complex::from_maximal(std::move(facets));
    if (c.dim() != dim)
        throw parse_error("\"dim\" is " + std::to_string(dim) + " but the facets have dimension " +
                          std::to_string(c.dim()));
    return {std::move(c), n};
}

std::string to_flat(const Complex& a) {
    std::ostringstream os;
    for (const Face& f : a.facets()) {
        const auto& verts = f.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i) os << ' ';
            os << verts[i];
        }
        os << '\n';
    }
    return os.str();
}

Complex from_flat(const std::string& text) {
    std::vector<Face> facets;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        const std::size_t end = text.find('\n', pos);
        const std::string line =
            end == std::string::npos ? text.substr(pos) : text.substr(pos, end - pos);
        pos = end == std::string::npos ? text.size() : end + 1;
        ++line_no;

        const std::size_t ws = line.find_first_not_of(" \t\r");
        if (ws != std::string::npos && line[ws] == '#') continue;

        std::vector<Vertex> verts;
        std::istringstream is(line);
        std::string tok;
        while (is >> tok) {
            int value = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw parse_error("line " + std::to_string(line_no) + ": non-integer token \"" +
                                  tok + "\"");
            if (value == 0)
                throw parse_error("line " + std::to_string(line_no) + ": vertex id 0");
            verts.push_back(value);
        }
        try {
            facets.push_back(Face(std::move(verts)));
        } catch (const malformed_face_error& e) {
            throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return Complex::make(std::move(facets));
}

std::string report_to_json(const VerificationReport& report) {
    ordered_json j;
    j["all_pass"] = report.all_pass();
    j["total"] = report.checks.size();
    j["failed"] = report.fail_count();
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : report.checks) {
        ordered_json jc;
        jc["claim"] = c.claim;
        jc["status"] = c.pass ? "pass" : "fail";
        if (!c.witnesses.empty()) {
            ordered_json w = ordered_json::array();
            for (const Face& f : c.witnesses) w.push_back(f.vertices());
            jc["witnesses"] = std::move(w);
        }
        if (!c.note.empty()) jc["note"] = c.note;
        jc["elapsed_ms"] = c.elapsed_ms;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    return j.dump(2);
}

}  // namespace csph::io
