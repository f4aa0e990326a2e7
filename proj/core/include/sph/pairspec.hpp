#ifndef SPH_PAIRSPEC_HPP
#define SPH_PAIRSPEC_HPP

#include <sph/reps.hpp>

namespace sph {

// one "factor@embedding" term on the h side
struct EmbTag {
    std::string name;
    std::vector<long> args;
    bool operator==(const EmbTag&) const = default;
};

struct HTerm {
    std::string head;
    std::vector<std::string> args;  // numeric or letter arguments, as written
    std::optional<EmbTag> emb;
    bool operator==(const HTerm&) const = default;
};

struct PairSpec {
    std::string g_head;
    std::vector<std::string> g_args;
    std::vector<HTerm> h_terms;  // empty means h = g
    std::string raw_text;

    bool operator==(const PairSpec& o) const {
        return g_head == o.g_head && g_args == o.g_args && h_terms == o.h_terms;
    }
};

// "g = alg ; h = term (+ term)*"; positioned ParseError on malformed input
PairSpec parse_spec(const std::string& text);
// canonical rendering; parse(print_spec(s)) == s
std::string print_spec(const PairSpec& s);

// resolve a surface name like sl(3,H), so(4), sp(2,R), so*(10) to a family
FormFamily parse_family(const std::string& head, const std::vector<std::string>& args);

struct BuiltPair {
    RealForm g;
    Subalg h;
    std::optional<std::size_t> rank_h;  // carried when the recipe tracks it
};

BuiltPair build_pair(const PairSpec& s);

// representation surface syntax: std(F), adjoint(F), sym2(F), sym3(F),
// wedge2(F), wedge3(F), wedge0(k,n), spin(7|9), g2
RepData parse_rep(const std::string& text);

} // namespace sph

#endif
