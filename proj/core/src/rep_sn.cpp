#include "novikov/rep_sn.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include "json_detail.hpp"
#include "novikov/errors.hpp"

namespace novikov {

namespace {

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

void check_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1])) throw PreconditionError("not a partition: parts must be positive and weakly decreasing");
    }
}

void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

// Beta-set of lambda with `len` beads: lambda_i + len - i.
std::vector<int> beta_set(const Partition& lambda, std::size_t len) {
    std::vector<int> b(len);
    for (std::size_t i = 0; i < len; ++i) {
        const int part = i < lambda.size() ? lambda[i] : 0;
        b[i] = part + static_cast<int>(len - 1 - i);
    }
    return b;
}

Partition from_beta(std::vector<int> b) {
    std::sort(b.begin(), b.end(), std::greater<>());
    Partition p;
    const std::size_t len = b.size();
    for (std::size_t i = 0; i < len; ++i) {
        const int part = b[i] - static_cast<int>(len - 1 - i);
        if (part > 0) p.push_back(part);
    }
    return p;
}

long mn(const Partition& lambda, const Partition& mu, std::size_t from,
        std::map<std::pair<Partition, std::size_t>, long>& memo) {
    if (from == mu.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, from);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = mu[from];
    const std::size_t len = lambda.size() + static_cast<std::size_t>(r);
    std::vector<int> b = beta_set(lambda, len);
    long total = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const int target = b[i] - r;
        if (target < 0 || std::find(b.begin(), b.end(), target) != b.end()) continue;
        // height = beads strictly between target and b[i]
        int between = 0;
        for (int x : b) {
            if (x > target && x < b[i]) ++between;
        }
        std::vector<int> nb = b;
        nb[i] = target;
        const long sub = mn(from_beta(nb), mu, from + 1, memo);
        total += (between % 2 == 0 ? 1 : -1) * sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::string partition_label(const Partition& p) {
    std::string s = "V_{";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != 0) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "}";
}

Partition parse_partition(std::string_view text) {
    std::string t;
    for (char c : text) {
        if (c != 'V' && c != '_' && c != '{' && c != '}' && c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    Partition p;
    if (t.find(',') != std::string::npos) {
        std::stringstream ss(t);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("invalid partition '" + std::string(text) + "'");
            p.push_back(std::stoi(part));
        }
    } else {
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("invalid partition '" + std::string(text) + "'");
            p.push_back(c - '0');
        }
    }
    if (p.empty()) throw ParseError("empty partition");
    check_partition(p);
    return p;
}

long character(const Partition& lambda, const Partition& mu) {
    check_partition(lambda);
    if (weight(lambda) != weight(mu)) throw ShapeError("character: |lambda| != |mu|");
    if (weight(lambda) > 12) throw ResourceError("character: size above 12");
    static std::mutex lock;
    static std::map<std::pair<Partition, Partition>, long> cache;
    Partition sorted_mu = mu;
    std::sort(sorted_mu.begin(), sorted_mu.end(), std::greater<>());
    {
        std::lock_guard<std::mutex> g(lock);
        if (auto it = cache.find({lambda, sorted_mu}); it != cache.end()) return it->second;
    }
    std::map<std::pair<Partition, std::size_t>, long> memo;
    const long v = mn(lambda, sorted_mu, 0, memo);
    std::lock_guard<std::mutex> g(lock);
    cache.emplace(std::make_pair(lambda, sorted_mu), v);
    return v;
}

long hook_dim(const Partition& lambda) {
    check_partition(lambda);
    const int n = weight(lambda);
    if (n > 12) throw ResourceError("hook_dim: size above 12");
    Rational num = factorial(n);
    Rational den(1);
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            int below = 0;
            for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++below;
            den *= Rational(lambda[i] - j + below);
        }
    }
    return (num / den).to_long();
}

Rational class_size(const Partition& mu) {
    std::map<int, int> m;
    for (int x : mu) ++m[x];
    Rational z(1);
    for (const auto& [i, k] : m) {
        for (int t = 0; t < k; ++t) z *= Rational(i);
        z *= factorial(k);
    }
    return factorial(weight(mu)) / z;
}

Partition cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    Partition mu;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j] - 1)) {
            seen[j] = true;
            ++len;
        }
        mu.push_back(len);
    }
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return mu;
}

std::vector<int> class_representative(const Partition& mu) {
    std::vector<int> perm;
    int start = 1;
    for (int len : mu) {
        for (int k = 0; k < len; ++k) perm.push_back(start + (k + 1) % len);
        start += len;
    }
    return perm;
}

long ModuleDecomposition::multiplicity(const Partition& p) const {
    for (const auto& [q, m] : modules) {
        if (q == p) return m;
    }
    return 0;
}

long ModuleDecomposition::dimension() const {
    long d = 0;
    for (const auto& [p, m] : modules) d += m * hook_dim(p);
    return d;
}

std::string ModuleDecomposition::str() const {
    if (modules.empty()) return "0";
    std::string s;
    for (const auto& [p, m] : modules) {
        if (!s.empty()) s += " + ";
        s += partition_label(p);
        if (m != 1) s += "^" + std::to_string(m);
    }
    return s;
}

ModuleDecomposition decompose_class_function(int n, const std::map<Partition, Rational>& trace) {
    ModuleDecomposition d;
    d.n = n;
    const Rational nfact = factorial(n);
    for (const Partition& lambda : partitions(n)) {
        Rational acc;
        for (const Partition& mu : partitions(n)) {
            auto it = trace.find(mu);
            if (it == trace.end()) throw PreconditionError("class function missing a cycle type");
            acc += class_size(mu) * Rational(character(lambda, mu)) * it->second;
        }
        acc /= nfact;
        if (!acc.is_integer() || acc.sign() < 0) {
            throw ConsistencyError("multiplicity of " + partition_label(lambda) + " is " + acc.str() + ", not a nonnegative integer");
        }
        if (!acc.is_zero()) d.modules.emplace_back(lambda, acc.to_long());
    }
    return d;
}

Rational quotient_trace(const IdealBasis& ideal, int n, const std::vector<int>& perm) {
    const NovBasis& b = nov_basis(n);
    const auto map = b.permutation_map(perm);
    long fixed = 0;
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] == i) ++fixed;
    }
    // sigma(r_j)[p_j] = r_j[sigma^{-1}(p_j)]
    std::vector<std::uint32_t> inv(map.size());
    for (std::uint32_t i = 0; i < map.size(); ++i) inv[map[i]] = i;
    const EchelonBasis& level = ideal.level(n);
    Rational on_ideal;
    for (std::size_t j = 0; j < level.rank(); ++j) on_ideal += level.entry(j, inv[level.pivot(j)]);
    return Rational(fixed) - on_ideal;
}

ModuleDecomposition decompose(const IdealBasis& ideal, int n) {
    std::map<Partition, Rational> trace;
    for (const Partition& mu : partitions(n)) trace[mu] = quotient_trace(ideal, n, class_representative(mu));
    ModuleDecomposition d = decompose_class_function(n, trace);
    if (d.dimension() != static_cast<long>(ideal.quotient_dim(n))) {
        throw ConsistencyError("decomposition dimension disagrees with the quotient dimension");
    }
    return d;
}

DistributivityResult is_distributive(const IdealBasis& ideal, int max_arity) {
    DistributivityResult r;
    for (int n = 1; n <= max_arity; ++n) {
        for (const auto& [p, m] : decompose(ideal, n).modules) {
            if (m > 1) {
                r.distributive = false;
                r.first_failure = std::make_pair(n, p);
                return r;
            }
        }
    }
    return r;
}

DistributivityResult is_distributive(const std::vector<MagPoly>& generators, int max_arity, const ClosureOptions& options) {
    return is_distributive(build_ideal(generators, max_arity, options), max_arity);
}

std::string to_json(const ModuleDecomposition& d) {
    detail::json mods = detail::json::array();
    for (const auto& [p, m] : d.modules) mods.push_back({{"partition", p}, {"mult", m}});
    return detail::json{{"n", d.n}, {"modules", mods}}.dump();
}

ModuleDecomposition decomposition_from_json(std::string_view text) {
    const detail::json j = detail::parse_json(text);
    ModuleDecomposition d;
    d.n = j.at("n").get<int>();
    for (const auto& m : j.at("modules")) {
        Partition p = m.at("partition").get<Partition>();
        check_partition(p);
        if (weight(p) != d.n) throw ParseError("decomposition JSON: partition size differs from n");
        d.modules.emplace_back(std::move(p), m.at("mult").get<long>());
    }
    return d;
}

} // namespace novikov
