#include "partalg/io.hpp"

#include <json.hpp>
#include <sstream>

#include "partalg/errors.hpp"

namespace partalg {

using nlohmann::json;

namespace {

json partition_json(const Partition& p) { return json(p.parts()); }

Partition partition_from(const json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

json labels_json(const std::vector<Partition>& labels) {
    json out = json::array();
    for (const auto& l : labels) out.push_back(partition_json(l));
    return out;
}

}  // namespace

std::string to_json(const Partition& p) { return partition_json(p).dump(); }

Partition partition_from_json(const std::string& text) {
    return partition_from(json::parse(text));
}

std::string to_json(const Diagram& d) {
    json j;
    j["n"] = d.n();
    j["blocks"] = d.blocks();
    return j.dump();
}

Diagram diagram_from_json(const std::string& text) {
    json j = json::parse(text);
    return Diagram(j.at("n").get<int>(), j.at("blocks").get<std::vector<std::vector<int>>>());
}

std::string to_json(const MarkedAbacus& m) {
    json j;
    j["p"] = m.p;
    j["beads"] = m.beads;
    j["positions"] = m.positions;
    j["marker"] = m.marker;
    return j.dump();
}

MarkedAbacus abacus_from_json(const std::string& text) {
    json j = json::parse(text);
    MarkedAbacus m;
    m.p = j.at("p").get<int>();
    m.beads = j.at("beads").get<long>();
    m.positions = j.at("positions").get<std::vector<long>>();
    m.marker = j.at("marker").get<int>();
    return m;
}

std::string to_json(const BlockDecomposition& b) {
    json j;
    j["n"] = b.n;
    j["p"] = b.characteristic;
    if (b.delta)
        j["delta"] = *b.delta;
    else
        j["delta"] = "ss";
    json classes = json::array();
    for (const auto& cls : b.classes) classes.push_back(labels_json(cls));
    j["classes"] = classes;
    return j.dump();
}

BlockDecomposition blocks_from_json(const std::string& text) {
    json j = json::parse(text);
    BlockDecomposition b;
    b.n = j.at("n").get<int>();
    b.characteristic = j.at("p").get<int>();
    if (j.at("delta").is_number()) b.delta = j.at("delta").get<long>();
    for (const auto& cls : j.at("classes")) {
        std::vector<Partition> c;
        for (const auto& l : cls) c.push_back(partition_from(l));
        b.classes.push_back(std::move(c));
    }
    return b;
}

std::string to_json(const LabeledMatrix& m, int n, const FieldSpec& spec) {
    json j;
    j["n"] = n;
    j["field"]["p"] = spec.characteristic;
    j["field"]["ext"] = spec.delta_is_generator;
    j["delta"] = spec.delta_str();
    j["rows"] = labels_json(m.rows);
    j["cols"] = labels_json(m.cols);
    j["entries"] = m.entries;
    return j.dump();
}

LabeledMatrix labeled_matrix_from_json(const std::string& text) {
    json j = json::parse(text);
    LabeledMatrix m;
    for (const auto& l : j.at("rows")) m.rows.push_back(partition_from(l));
    for (const auto& l : j.at("cols")) m.cols.push_back(partition_from(l));
    m.entries = j.at("entries").get<std::vector<std::vector<long>>>();
    return m;
}

std::string to_csv(const LabeledMatrix& m) {
    std::ostringstream out;
    auto quoted = [](const Partition& p) { return "\"" + p.str() + "\""; };
    out << "\"\"";
    for (const auto& c : m.cols) out << "," << quoted(c);
    out << "\n";
    for (size_t r = 0; r < m.rows.size(); ++r) {
        out << quoted(m.rows[r]);
        for (size_t c = 0; c < m.cols.size(); ++c) out << "," << m.entries[r][c];
        out << "\n";
    }
    return out.str();
}

std::string render_labeled_matrix(const LabeledMatrix& m) {
    size_t label_width = 1;
    for (const auto& r : m.rows) label_width = std::max(label_width, r.str().size());
    std::vector<size_t> col_width(m.cols.size());
    for (size_t c = 0; c < m.cols.size(); ++c) {
        col_width[c] = m.cols[c].str().size();
        for (size_t r = 0; r < m.rows.size(); ++r)
            col_width[c] = std::max(col_width[c], std::to_string(m.entries[r][c]).size());
    }
    std::ostringstream out;
    out << std::string(label_width, ' ') << " |";
    for (size_t c = 0; c < m.cols.size(); ++c) {
        std::string s = m.cols[c].str();
        out << " " << std::string(col_width[c] - s.size(), ' ') << s;
    }
    size_t total = 0;
    for (size_t c = 0; c < m.cols.size(); ++c) total += col_width[c] + 1;
    out << "\n" << std::string(label_width, '-') << "-+" << std::string(total, '-') << "\n";
    for (size_t r = 0; r < m.rows.size(); ++r) {
        std::string s = m.rows[r].str();
        out << s << std::string(label_width - s.size(), ' ') << " |";
        for (size_t c = 0; c < m.cols.size(); ++c) {
            std::string e = std::to_string(m.entries[r][c]);
            out << " " << std::string(col_width[c] - e.size(), ' ') << e;
        }
        out << "\n";
    }
    return out.str();
}

std::string render_blocks(const BlockDecomposition& b) {
    std::ostringstream out;
    out << "n = " << b.n;
    if (b.characteristic)
        out << ", p = " << b.characteristic;
    else
        out << ", characteristic 0";
    if (b.delta)
        out << ", delta = " << *b.delta;
    else
        out << ", delta non-integral";
    out << "\n";
    for (size_t i = 0; i < b.classes.size(); ++i) {
        out << "  block " << i + 1 << ": {";
        for (size_t k = 0; k < b.classes[i].size(); ++k) {
            if (k) out << ", ";
            out << b.classes[i][k].str();
        }
        out << "}\n";
    }
    return out.str();
}

}  // namespace partalg
