#include <sph/report.hpp>

namespace sph {

namespace {

void flatten(const ReportDoc& node, const std::string& prefix, std::string& out) {
    if (node.is_object()) {
        for (const auto& [k, v] : node.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& v : node) flatten(v, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        out += prefix + " = " + (node.is_string() ? node.get<std::string>() : node.dump()) + "\n";
    }
}

} // namespace

ReportDoc verdict_json(const Verdict& v) {
    ReportDoc j;
    j["outcome"] = outcome_name(v.outcome);
    j["achieved"] = v.achieved;
    j["target"] = v.target;
    if (!v.positive()) j["defect"] = v.defect();
    j["samples_used"] = v.samples_used;
    for (const auto& [k, n] : v.numbers) j["numbers"][k] = n;
    if (!v.notes.empty()) j["notes"] = v.notes;
    if (v.witness) {
        ReportDoc rows = ReportDoc::array();
        for (std::size_t r = 0; r < v.witness->rows(); ++r) {
            std::string line;
            for (std::size_t c = 0; c < v.witness->cols(); ++c) {
                if (c) line += " ";
                line += (*v.witness)(r, c).str();
            }
            rows.push_back(line);
        }
        j["witness"] = rows;
    }
    return j;
}

std::string render_text(const ReportDoc& doc) {
    std::string out;
    flatten(doc, "", out);
    return out;
}

std::string render_structured(const ReportDoc& doc) { return doc.dump(2) + "\n"; }

} // namespace sph
