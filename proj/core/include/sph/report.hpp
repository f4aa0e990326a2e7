#ifndef SPH_REPORT_HPP
#define SPH_REPORT_HPP

#include <sph/checks.hpp>
#include <json.hpp>

namespace sph {

// one self-describing document per invocation, stable key order
using ReportDoc = nlohmann::ordered_json;

ReportDoc verdict_json(const Verdict& v);

// "key = value" lines, nested keys joined with '.'
std::string render_text(const ReportDoc& doc);
// indented JSON, trailing newline
std::string render_structured(const ReportDoc& doc);

} // namespace sph

#endif
