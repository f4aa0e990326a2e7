#ifndef SPH_CATALOG_HPP
#define SPH_CATALOG_HPP

#include <sph/errors.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sph {

using ParamMap = std::map<std::string, long>;

// One table row: templated recipes plus the expected-verdict logic. Templates
// are pair-spec fragments with {expr} placeholders evaluated over the params.
struct CatalogCase {
    std::string id;                   // "T1.4", "T3.5", ...
    std::string kind;                 // pair | factor | preh | levi
    std::string table;                // T1..T8
    std::string family;               // ambient family name ("" for non-executable rows)
    std::string g_tmpl, h_tmpl, h2_tmpl, rep_tmpl;
    std::vector<std::string> params;  // parameter names
    std::vector<std::string> require; // hard range conditions; violation -> OutOfRange
    struct Rule {
        std::string cond;             // empty = fallback
        std::string verdict;
    };
    std::vector<Rule> rules;
    std::vector<ParamMap> minimal;    // smallest in-range instantiations
    std::vector<ParamMap> flips;      // single-condition violations, expected negative
    std::string cite;                 // verbatim row quote
    bool exec = true;
    std::string exec_note;            // reason when exec = false
    std::string inter_expr;           // factor rows: real dim of h1 cap h2
    std::string lcaph_expr;           // levi rows: real dim of l cap h
    int form = -1;                    // preh rows: 0 none, 1 symmetric, 2 skew
};

struct CaseFilter {
    std::optional<std::string> table;
    std::optional<std::string> family;
    std::optional<long> max_dim;      // ambient real dimension at minimal params
};

struct Instance {
    const CatalogCase* source = nullptr;
    ParamMap params;
    std::string g_src, h_src, h2_src, rep_src;  // rendered pair-spec text
    std::string expected;                       // verdict name
    std::optional<long> expected_intersection;
    std::optional<long> expected_lcaph;
    std::optional<int> expected_form;
};

// integer expressions (+ - * / % and parentheses, / floors) and conditions
// (comparisons, odd()/even(), && and ||) over a parameter environment
long eval_expr(const std::string& text, const ParamMap& env);
bool eval_cond(const std::string& text, const ParamMap& env);

// loaded once from the committed data file (SPH_CATALOG overrides the path)
const std::vector<CatalogCase>& catalog();
std::vector<const CatalogCase*> list_cases(const CaseFilter& f = {});

// renders the recipes and evaluates the expected verdict; throws OutOfRange
// when a require condition fails or a parameter is missing
Instance instantiate(const CatalogCase& c, const ParamMap& params);

// ambient real dimension of the instantiated g, when computable
std::optional<long> ambient_dim(const CatalogCase& c, const ParamMap& params);

// advisory redundancy lint: small-parameter ambients that duplicate earlier
// rows (su/sp below total 2, sl_H below 2, so below total 7, so* below 10)
bool within_canonical_range(const CatalogCase& c, const ParamMap& params);

} // namespace sph

#endif
