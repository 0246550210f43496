#include "abacus/text.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace abacus {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

long long parse_int(const std::string& s) {
    require_valid(!s.empty(), "empty number");
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw validation_error("bad integer: '" + s + "'");
    }
    require_valid(pos == s.size(), "bad integer: '" + s + "'");
    return v;
}

} // namespace

Partition parse_partition(const std::string& text) {
    std::string t = trim(text);
    if (t.empty() || t == "-") return Partition{};
    std::vector<int> parts;
    for (const auto& token : split(t, ',')) {
        require_valid(!token.empty(), "empty partition part in '" + text + "'");
        auto caret = token.find('^');
        if (caret == std::string::npos) {
            parts.push_back(static_cast<int>(parse_int(token)));
        } else {
            long long value = parse_int(trim(token.substr(0, caret)));
            long long mult = parse_int(trim(token.substr(caret + 1)));
            require_valid(mult >= 1, "exponent must be positive in '" + token + "'");
            for (long long k = 0; k < mult; ++k) parts.push_back(static_cast<int>(value));
        }
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (int i = 1; i <= p.length(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(p.part(i));
    }
    return out;
}

BetaSet parse_beta_set(const std::string& text) {
    auto fields = split(text, ';');
    require_valid(fields.size() == 2, "beta-set text needs 'floor=..; beads=..'");
    auto floor_kv = split(fields[0], '=');
    auto beads_kv = split(fields[1], '=');
    require_valid(floor_kv.size() == 2 && floor_kv[0] == "floor", "missing floor field");
    require_valid(beads_kv.size() >= 1 && beads_kv[0] == "beads", "missing beads field");
    long long floor = parse_int(floor_kv[1]);
    std::vector<long long> beads;
    if (beads_kv.size() == 2 && !beads_kv[1].empty()) {
        for (const auto& token : split(beads_kv[1], ',')) beads.push_back(parse_int(token));
    }
    return BetaSet(floor, std::move(beads));
}

std::string format_beta_set(const BetaSet& b) {
    std::string out = "floor=" + std::to_string(b.floor()) + "; beads=";
    const auto& beads = b.explicit_beads();
    for (auto it = beads.rbegin(); it != beads.rend(); ++it) {
        if (it != beads.rbegin()) out += ',';
        out += std::to_string(*it);
    }
    return out;
}

std::string matrix_to_json(const RunnerMatrix& m) {
    json j;
    j["d"] = m.d;
    j["e"] = m.e;
    j["rows"] = m.rows();
    return j.dump();
}

RunnerMatrix matrix_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& ex) {
        throw validation_error(std::string("bad matrix JSON: ") + ex.what());
    }
    require_valid(j.contains("d") && j.contains("e") && j.contains("rows"),
                  "matrix JSON needs d, e, rows");
    return matrix_from_rows_json(j["rows"].dump(), j["d"].get<int>(), j["e"].get<int>());
}

RunnerMatrix matrix_from_rows_json(const std::string& text, int d, int e) {
    json rows;
    try {
        rows = json::parse(text);
    } catch (const std::exception& ex) {
        throw validation_error(std::string("bad matrix rows: ") + ex.what());
    }
    require_valid(rows.is_array(), "matrix rows must be an array");
    RunnerMatrix m(d, e);
    require_valid(static_cast<int>(rows.size()) == d - 1, "matrix needs d-1 rows");
    for (int x = 1; x < d; ++x) {
        const auto& row = rows[static_cast<std::size_t>(x - 1)];
        require_valid(row.is_array() && static_cast<int>(row.size()) == e,
                      "each matrix row needs e entries");
        for (int y = 0; y < e; ++y) {
            long long v = row[static_cast<std::size_t>(y)].get<long long>();
            require_valid(v >= 0, "matrix entries must be non-negative");
            m.at(x, y) = v;
        }
    }
    return m;
}

std::string matrix_rows_json(const RunnerMatrix& m) {
    return json(m.rows()).dump();
}

namespace {

json witness_json(const std::optional<HookClassWitness>& w) {
    if (!w) return nullptr;
    return json{{"x", w->x}, {"y", w->y}, {"arm", w->arm}};
}

} // namespace

std::string classify_report_json(const Partition& p, int d, int e, const HookClassReport& r) {
    json j;
    j["partition"] = format_partition(p);
    j["d"] = d;
    j["e"] = e;
    j["balanced"] = r.balanced;
    j["shift_balanced"] = r.shift_balanced;
    j["skewed"] = r.skewed;
    j["shift_skewed"] = r.shift_skewed;
    json w;
    w["balanced"] = witness_json(r.balanced_witness);
    w["shift_balanced"] = witness_json(r.shift_balanced_witness);
    w["skewed"] = witness_json(r.skewed_witness);
    w["shift_skewed"] = witness_json(r.shift_skewed_witness);
    j["witnesses"] = w;
    return j.dump();
}

std::string core_weight_json(const Partition& core, long long weight) {
    json j;
    j["core"] = format_partition(core);
    j["weight"] = weight;
    return j.dump();
}

namespace {

std::string render_rows(const BetaSet& b, const std::vector<long long>& emitted, int e) {
    long long top = b.least_empty() - e; // one fully packed row for context
    long long high = std::max(b.max_bead(), b.least_empty());
    if (!emitted.empty()) high = std::max(high, *std::max_element(emitted.begin(), emitted.end()));

    auto row_of = [e](long long v) {
        long long r = v >= 0 ? v / e : -((-v + e - 1) / e);
        return r;
    };
    long long row_lo = row_of(top), row_hi = row_of(high);
    std::string out;
    for (long long r = row_lo; r <= row_hi; ++r) {
        std::string line;
        for (int c = 0; c < e; ++c) {
            long long v = r * e + c;
            bool is_emitted = std::find(emitted.begin(), emitted.end(), v) != emitted.end();
            line += is_emitted ? '#' : (b.contains(v) ? 'o' : '.');
            if (c + 1 < e) line += ' ';
        }
        out += line;
        out += "   | row " + std::to_string(r) + ", positions " + std::to_string(r * e) + ".." +
               std::to_string(r * e + e - 1) + "\n";
    }
    return out;
}

} // namespace

std::string render_abacus(const BetaSet& b, int e) {
    return render_rows(b, {}, e);
}

std::string render_abacus_pair(const BetaSet& b, const std::vector<long long>& emitted, int e) {
    return render_rows(b, emitted, e);
}

std::string trace_json(const AmaTrace& trace, const Partition& input, int e,
                       std::optional<int> d) {
    json j;
    j["partition"] = format_partition(input);
    j["e"] = e;
    if (d) j["d"] = *d;
    json steps = json::array();
    for (const auto& step : trace.steps) {
        json s;
        s["s"] = format_beta_set(step.s);
        if (step.emitted) s["emitted"] = *step.emitted;
        if (step.combined_pair_ok) s["combined_pair"] = *step.combined_pair_ok;
        steps.push_back(s);
    }
    j["steps"] = steps;
    j["emitted"] = trace.emitted;
    j["result"] = format_partition(trace.result);
    if (trace.combined_matrix) j["combined_matrix"] = trace.combined_matrix->rows();
    return j.dump();
}

} // namespace abacus
