#include <sph/catalog.hpp>

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace sph {

namespace {

// ---- integer expression / condition evaluation ----

struct ExprParser {
    const std::string& s;
    const ParamMap& env;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(const char* tok) {
        skip();
        std::size_t n = std::strlen(tok);
        if (s.compare(pos, n, tok) == 0) {
            pos += n;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw OutOfRange("catalog expression '" + s + "': " + msg);
    }

    long atom() {
        skip();
        if (eat("(")) {
            long v = expr();
            if (!eat(")")) fail("expected )");
            return v;
        }
        if (eat("-")) return -atom();
        if (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            long v = 0;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
                v = v * 10 + (s[pos++] - '0');
            return v;
        }
        if (pos < s.size() && (std::isalpha((unsigned char)s[pos]) || s[pos] == '_')) {
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            auto it = env.find(name);
            if (it == env.end()) fail("unknown parameter " + name);
            return it->second;
        }
        fail("expected value");
    }
    long term() {
        long v = atom();
        while (true) {
            if (eat("*")) v *= atom();
            else if (eat("%")) v %= atom();
            else if (eat("/")) {
                long d = atom();
                if (d == 0) fail("division by zero");
                long q = v / d;
                if ((v % d) != 0 && ((v < 0) != (d < 0))) --q;  // floor
                v = q;
            } else break;
        }
        return v;
    }
    long expr() {
        long v = term();
        while (true) {
            if (eat("+")) v += term();
            else if (eat("-")) v -= term();
            else break;
        }
        return v;
    }

    bool cmp() {
        skip();
        if (s.compare(pos, 4, "odd(") == 0) {
            pos += 4;
            long v = expr();
            if (!eat(")")) fail("expected )");
            return (v % 2 + 2) % 2 == 1;
        }
        if (s.compare(pos, 5, "even(") == 0) {
            pos += 5;
            long v = expr();
            if (!eat(")")) fail("expected )");
            return v % 2 == 0;
        }
        long lhs = expr();
        if (eat("==")) return lhs == expr();
        if (eat("!=")) return lhs != expr();
        if (eat("<=")) return lhs <= expr();
        if (eat(">=")) return lhs >= expr();
        if (eat("<")) return lhs < expr();
        if (eat(">")) return lhs > expr();
        fail("expected comparison");
    }
    bool conj() {
        bool v = cmp();
        while (eat("&&")) v = cmp() && v;
        return v;
    }
    bool cond() {
        bool v = conj();
        while (eat("||")) v = conj() || v;
        return v;
    }
};

std::string render(const std::string& tmpl, const ParamMap& env) {
    std::string out;
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] != '{') {
            out += tmpl[i];
            continue;
        }
        std::size_t close = tmpl.find('}', i);
        if (close == std::string::npos)
            throw OutOfRange("catalog template '" + tmpl + "': unmatched {");
        out += std::to_string(eval_expr(tmpl.substr(i + 1, close - i - 1), env));
        i = close;
    }
    return out;
}

// ---- data file loading ----

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

ParamMap parse_assignments(const std::vector<std::string>& words, std::size_t from,
                           const std::string& where) {
    ParamMap m;
    for (std::size_t i = from; i < words.size(); ++i) {
        std::size_t eq = words[i].find('=');
        if (eq == std::string::npos)
            throw OutOfRange("catalog " + where + ": expected name=value, got " + words[i]);
        m[words[i].substr(0, eq)] = std::stol(words[i].substr(eq + 1));
    }
    return m;
}

std::string value_after_key(const std::string& line) {
    std::size_t sp = line.find(' ');
    if (sp == std::string::npos) return "";
    std::size_t start = line.find_first_not_of(' ', sp);
    return start == std::string::npos ? "" : line.substr(start);
}

std::vector<CatalogCase> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw OutOfRange("catalog data file not found: " + path);
    std::vector<CatalogCase> cases;
    CatalogCase cur;
    bool open = false;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw OutOfRange("catalog data line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> w = split_ws(line);
        const std::string& key = w[0];
        if (key == "case") {
            if (open) fail("nested case");
            cur = CatalogCase{};
            cur.id = w.at(1);
            open = true;
            continue;
        }
        if (!open) fail("key outside case block: " + key);
        if (key == "end") {
            if (cur.kind.empty()) fail(cur.id + ": missing kind");
            if (cur.cite.empty()) fail(cur.id + ": missing cite");
            cases.push_back(std::move(cur));
            open = false;
        } else if (key == "kind") {
            cur.kind = w.at(1);
        } else if (key == "table") {
            cur.table = w.at(1);
        } else if (key == "family") {
            cur.family = w.at(1);
        } else if (key == "g") {
            cur.g_tmpl = value_after_key(line);
        } else if (key == "h") {
            cur.h_tmpl = value_after_key(line);
        } else if (key == "h2") {
            cur.h2_tmpl = value_after_key(line);
        } else if (key == "rep") {
            cur.rep_tmpl = value_after_key(line);
        } else if (key == "param") {
            cur.params.assign(w.begin() + 1, w.end());
        } else if (key == "require") {
            cur.require.push_back(value_after_key(line));
        } else if (key == "when" || key == "else") {
            std::string rest = value_after_key(line);
            std::size_t arrow = rest.rfind("->");
            if (key == "when") {
                if (arrow == std::string::npos) fail("when rule needs ->");
                std::string cond = rest.substr(0, arrow);
                while (!cond.empty() && cond.back() == ' ') cond.pop_back();
                std::string verdict = split_ws(rest.substr(arrow + 2)).at(0);
                cur.rules.push_back({cond, verdict});
            } else {
                cur.rules.push_back({"", w.at(1)});
            }
        } else if (key == "minimal") {
            cur.minimal.push_back(parse_assignments(w, 1, cur.id + " minimal"));
        } else if (key == "flip") {
            cur.flips.push_back(parse_assignments(w, 1, cur.id + " flip"));
        } else if (key == "cite") {
            cur.cite = value_after_key(line);
        } else if (key == "exec") {
            cur.exec = w.at(1) == "yes";
        } else if (key == "note") {
            cur.exec_note = value_after_key(line);
        } else if (key == "inter") {
            cur.inter_expr = value_after_key(line);
        } else if (key == "lcaph") {
            cur.lcaph_expr = value_after_key(line);
        } else if (key == "form") {
            cur.form = std::stoi(w.at(1));
        } else {
            fail("unknown key " + key);
        }
    }
    if (open) fail("unterminated case " + cur.id);
    return cases;
}

std::string catalog_path() {
    if (const char* env = std::getenv("SPH_CATALOG")) return env;
#ifdef SPH_CATALOG_DEFAULT
    return SPH_CATALOG_DEFAULT;
#else
    return "data/catalog.txt";
#endif
}

// real dimension of the rendered ambient algebra
std::optional<long> head_dim(const std::string& g_src) {
    std::size_t par = g_src.find('(');
    if (par == std::string::npos) return {};
    std::string head = g_src.substr(0, par);
    std::vector<long> nums;
    std::string letter;
    std::size_t i = par + 1;
    while (i < g_src.size() && g_src[i] != ')') {
        if (std::isdigit((unsigned char)g_src[i])) {
            long v = 0;
            while (i < g_src.size() && std::isdigit((unsigned char)g_src[i]))
                v = v * 10 + (g_src[i++] - '0');
            nums.push_back(v);
        } else if (std::isalpha((unsigned char)g_src[i])) {
            letter += g_src[i++];
        } else {
            ++i;
        }
    }
    long a = nums.empty() ? 0 : nums[0];
    long total = 0;
    for (long v : nums) total += v;
    if (head == "su" && letter.empty()) return total * total - 1;
    if (head == "sl" && letter == "R") return a * a - 1;
    if (head == "sl" && letter == "H") return 4 * a * a - 1;
    if (head == "sl" && letter == "C") return 2 * (a * a - 1);
    if (head == "so" && letter == "C") return a * (a - 1);
    if (head == "so" && letter.empty()) return total * (total - 1) / 2;
    if (head == "so*") return a * (a - 1) / 2;
    if (head == "sp" && letter == "R") return a * (2 * a + 1);
    if (head == "sp" && letter == "C") return 2 * a * (2 * a + 1);
    if (head == "sp" && letter.empty()) return total * (2 * total + 1);
    return {};
}

}  // namespace

long eval_expr(const std::string& text, const ParamMap& env) {
    ExprParser p{text, env};
    long v = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

bool eval_cond(const std::string& text, const ParamMap& env) {
    ExprParser p{text, env};
    bool v = p.cond();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

const std::vector<CatalogCase>& catalog() {
    static const std::vector<CatalogCase> cases = load_catalog(catalog_path());
    return cases;
}

std::vector<const CatalogCase*> list_cases(const CaseFilter& f) {
    std::vector<const CatalogCase*> out;
    for (const CatalogCase& c : catalog()) {
        if (f.table && c.table != *f.table) continue;
        if (f.family && c.family != *f.family) continue;
        if (f.max_dim) {
            if (c.minimal.empty()) continue;
            std::optional<long> d = ambient_dim(c, c.minimal.front());
            if (!d || *d > *f.max_dim) continue;
        }
        out.push_back(&c);
    }
    return out;
}

Instance instantiate(const CatalogCase& c, const ParamMap& params) {
    for (const std::string& name : c.params)
        if (!params.count(name))
            throw OutOfRange(c.id + ": missing parameter " + name);
    for (const std::string& cond : c.require)
        if (!eval_cond(cond, params))
            throw OutOfRange(c.id + ": parameters violate " + cond);
    Instance inst;
    inst.source = &c;
    inst.params = params;
    inst.g_src = render(c.g_tmpl, params);
    inst.h_src = render(c.h_tmpl, params);
    if (!c.h2_tmpl.empty()) inst.h2_src = render(c.h2_tmpl, params);
    if (!c.rep_tmpl.empty()) inst.rep_src = render(c.rep_tmpl, params);
    for (const CatalogCase::Rule& r : c.rules) {
        if (r.cond.empty() || eval_cond(r.cond, params)) {
            inst.expected = r.verdict;
            break;
        }
    }
    if (inst.expected.empty())
        throw OutOfRange(c.id + ": no verdict rule matched");
    if (!c.inter_expr.empty()) inst.expected_intersection = eval_expr(c.inter_expr, params);
    if (!c.lcaph_expr.empty()) inst.expected_lcaph = eval_expr(c.lcaph_expr, params);
    if (c.form >= 0) inst.expected_form = c.form;
    return inst;
}

std::optional<long> ambient_dim(const CatalogCase& c, const ParamMap& params) {
    if (c.g_tmpl.empty()) return {};
    return head_dim(render(c.g_tmpl, params));
}

bool within_canonical_range(const CatalogCase& c, const ParamMap& params) {
    if (c.g_tmpl.empty()) return true;
    std::string g = render(c.g_tmpl, params);
    std::size_t par = g.find('(');
    if (par == std::string::npos) return true;
    std::string head = g.substr(0, par);
    std::vector<long> nums;
    for (std::size_t i = par + 1; i < g.size() && g[i] != ')';) {
        if (std::isdigit((unsigned char)g[i])) {
            long v = 0;
            while (i < g.size() && std::isdigit((unsigned char)g[i])) v = v * 10 + (g[i++] - '0');
            nums.push_back(v);
        } else {
            ++i;
        }
    }
    long total = 0;
    for (long v : nums) total += v;
    bool complex_or_split = g.find(",C") != std::string::npos || g.find(",R") != std::string::npos;
    if (head == "su" && !complex_or_split && nums.size() == 2 && nums[1] > 0) return total >= 2;
    if (head == "sl" && g.find(",H") != std::string::npos) return nums[0] >= 2;
    if (head == "sp" && !complex_or_split && nums.size() == 2 && nums[1] > 0) return total >= 2;
    if (head == "so" && !complex_or_split && nums.size() == 2 && nums[1] > 0) return total >= 7;
    if (head == "so*") return nums[0] >= 10;
    return true;
}

}  // namespace sph
