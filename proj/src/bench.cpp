#include "heintree/bench.hpp"

#include "heintree/inference.hpp"
#include "heintree/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hein {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in{std::string(s)};
    while (std::getline(in, token, ',')) out.push_back(trim(token));
    return out;
}

long long parse_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in integer '" + s + "'");
    return v;
}

// "4,8,16..128": plain entries plus ranges; ranges double when `doubling`,
// otherwise step by 1 (both ends inclusive).
std::vector<long long> parse_int_list(std::string_view text, bool doubling) {
    std::vector<long long> out;
    for (const std::string& item : split_list(text)) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(item));
            continue;
        }
        long long lo = parse_int(item.substr(0, dots));
        long long hi = parse_int(item.substr(dots + 2));
        if (lo < 1 || hi < lo) throw std::invalid_argument("bad range '" + item + "'");
        for (long long v = lo; v <= hi; v = doubling ? v * 2 : v + 1) out.push_back(v);
    }
    return out;
}

void validate_order_tag(const std::string& tag) {
    if (tag == "given" || tag == "depth-asc" || tag == "depth-desc") return;
    if (tag.rfind("random:", 0) == 0) {
        parse_int(tag.substr(7));
        return;
    }
    throw std::invalid_argument("unknown insertion order '" + tag + "'");
}

} // namespace

BenchConfig parse_bench_config(std::string_view text) {
    BenchConfig cfg;
    bool saw_n = false;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bench config line is not key=value: '" + raw + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "family") {
                if (value != "random" && value != "caterpillar" && value != "filled" &&
                    value != "beanstalk")
                    throw std::invalid_argument("unknown family '" + value + "'");
                cfg.family = value;
            } else if (key == "n") {
                cfg.sizes.clear();
                for (long long v : parse_int_list(value, /*doubling=*/true))
                    cfg.sizes.push_back(static_cast<int>(v));
                saw_n = true;
            } else if (key == "k") {
                cfg.ks.clear();
                for (long long v : parse_int_list(value, /*doubling=*/false))
                    cfg.ks.push_back(static_cast<int>(v));
            } else if (key == "seeds") {
                cfg.seeds.clear();
                for (long long v : parse_int_list(value, /*doubling=*/false))
                    cfg.seeds.push_back(static_cast<std::uint64_t>(v));
            } else if (key == "orders") {
                cfg.orders = split_list(value);
                for (const std::string& tag : cfg.orders) validate_order_tag(tag);
            } else if (key == "weights") {
                if (value != "unit" && value.rfind("rational:", 0) != 0)
                    throw std::invalid_argument("weights must be 'unit' or 'rational:RANGE'");
                if (value.rfind("rational:", 0) == 0 && parse_int(value.substr(9)) < 1)
                    throw std::invalid_argument("rational weight range must be >= 1");
                cfg.weights = value;
            } else if (key == "g") {
                cfg.g = GrowthSpec::parse(value);
            } else if (key == "seq") {
                LayerDegreeSequence seq = LayerDegreeSequence::parse(value);
                if (!seq.valid())
                    throw std::invalid_argument("layer-degree sequence needs entries >= 2");
                cfg.seq = seq.q;
            } else {
                throw std::invalid_argument("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string(e.what()) + " (line: '" + raw + "')");
        }
    }
    if (cfg.family.empty()) throw std::invalid_argument("bench config needs a family");
    if (cfg.family == "beanstalk" && !cfg.g)
        throw std::invalid_argument("beanstalk family needs g=...");
    if (cfg.family == "filled" && cfg.seq.empty())
        throw std::invalid_argument("filled family needs seq=...");
    if (cfg.family != "filled" && !saw_n)
        throw std::invalid_argument("family '" + cfg.family + "' needs n=...");
    for (int n : cfg.sizes)
        if (n < 2) throw std::invalid_argument("n must be >= 2");
    for (int k : cfg.ks)
        if (k < 3) throw std::invalid_argument("k must be >= 3");
    return cfg;
}

std::vector<std::string> insertion_order_labels(const WeightedTree& hidden, const std::string& tag) {
    if (tag != "given" && tag != "depth-asc" && tag != "depth-desc" && tag.rfind("random:", 0) != 0)
        throw std::invalid_argument("unknown insertion order '" + tag + "'");
    std::vector<std::string> labels = hidden.labels_sorted();
    // Generation order: L1..Ln, i.e. shorter labels first, then byte order.
    std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    if (tag == "given") return labels;
    if (tag.rfind("random:", 0) == 0) {
        Mcg64 rng(static_cast<std::uint64_t>(std::stoll(tag.substr(7))));
        for (std::size_t i = labels.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(rng.pick(i));
            std::swap(labels[i - 1], labels[j]);
        }
        return labels;
    }
    // depth-asc / depth-desc: hop distance from the designated root (node 0
    // when the family is unrooted), ties keeping generation order.
    const int root = hidden.root_hint().value_or(0);
    std::vector<int> depth(static_cast<std::size_t>(hidden.node_count()), -1);
    std::vector<int> queue{root};
    depth[static_cast<std::size_t>(root)] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (const auto& [to, w] : hidden.neighbors(v)) {
            (void)w;
            if (depth[static_cast<std::size_t>(to)] < 0) {
                depth[static_cast<std::size_t>(to)] = depth[static_cast<std::size_t>(v)] + 1;
                queue.push_back(to);
            }
        }
    }
    const bool asc = tag == "depth-asc";
    std::stable_sort(labels.begin(), labels.end(),
                     [&](const std::string& a, const std::string& b) {
                         int da = depth[static_cast<std::size_t>(*hidden.node_of(a))];
                         int db = depth[static_cast<std::size_t>(*hidden.node_of(b))];
                         return asc ? da < db : da > db;
                     });
    return labels;
}

namespace {

struct InstanceSpec {
    int n = 0;
    int k = 0; // 0 = not applicable (non-random family); measured later
    std::uint64_t seed = 0;
    std::string order;
};

BenchRecord run_instance(const BenchConfig& cfg, const InstanceSpec& inst) {
    WeightMode wm = WeightMode::unit();
    if (cfg.weights.rfind("rational:", 0) == 0)
        wm = WeightMode::random_rational(inst.seed, std::stoll(cfg.weights.substr(9)));

    WeightedTree hidden;
    if (cfg.family == "random") {
        hidden = make_random(inst.n, inst.k, inst.seed, wm);
    } else if (cfg.family == "caterpillar") {
        hidden = make_caterpillar(inst.n, wm);
    } else if (cfg.family == "filled") {
        LayerDegreeSequence seq;
        seq.q = cfg.seq;
        hidden = make_filled(seq, wm);
    } else {
        hidden = make_beanstalk(*cfg.g, inst.n, wm);
    }

    int k_rec = inst.k;
    if (k_rec == 0) {
        for (int v = 0; v < hidden.node_count(); ++v) k_rec = std::max(k_rec, hidden.degree(v));
        k_rec = std::max(k_rec, 3);
    }

    DistanceOracle oracle(hidden);
    const std::vector<std::string> order = insertion_order_labels(hidden, inst.order);

    PartialTree partial(order[0], order[1], oracle.query(order[0], order[1]));
    bool per_insertion_ok = true;
    long long max_per = 0;
    for (std::size_t i = 2; i < order.size(); ++i) {
        InsertResult r = insert_leaf(partial, order[i], oracle);
        max_per = std::max(max_per, r.queries_used);
        if (r.queries_used > r.pre_unrooted_complexity) per_insertion_ok = false;
    }
    const WeightedTree inferred = partial.freeze();
    if (!trees_equivalent(inferred, hidden)) {
        std::string msg = "reconstruction mismatch: family=" + cfg.family +
                          " n=" + std::to_string(inst.n) + " k=" + std::to_string(inst.k) +
                          " seed=" + std::to_string(inst.seed) + " order=" + inst.order;
        throw std::runtime_error(msg);
    }

    BenchRecord rec;
    rec.family = cfg.family;
    rec.n = inst.n;
    rec.k = k_rec;
    rec.seed = inst.seed;
    rec.insertion_order = inst.order;
    rec.total_queries = oracle.query_count();
    rec.max_per_insertion = max_per;
    rec.unrooted_complexity_final = unrooted_complexity_serial(inferred).value;
    rec.hein_bound = hein_bound_ceil(inst.n, k_rec);
    if (cfg.family == "beanstalk")
        rec.beanstalk_bound = beanstalk_complexity_bound(*cfg.g, inst.n).bound;
    rec.within_bound =
        per_insertion_ok && total_bound_holds(rec.total_queries, inst.n, k_rec);
    return rec;
}

bool record_key_less(const BenchRecord& a, const BenchRecord& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.n != b.n) return a.n < b.n;
    if (a.k != b.k) return a.k < b.k;
    if (a.seed != b.seed) return a.seed < b.seed;
    return a.insertion_order < b.insertion_order;
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
    std::vector<InstanceSpec> instances;
    std::vector<int> sizes = cfg.sizes;
    if (cfg.family == "filled") {
        LayerDegreeSequence seq;
        seq.q = cfg.seq;
        sizes = {static_cast<int>(filled_complexity_and_leaves(seq).second)};
    }
    const std::vector<int> ks = cfg.family == "random" ? cfg.ks : std::vector<int>{0};
    for (int n : sizes)
        for (int k : ks)
            for (std::uint64_t seed : cfg.seeds)
                for (const std::string& order : cfg.orders) instances.push_back({n, k, seed, order});

    std::vector<BenchRecord> records(instances.size());
    std::vector<std::string> errors(instances.size());
    const int count = static_cast<int>(instances.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        try {
            records[static_cast<std::size_t>(i)] = run_instance(cfg, instances[static_cast<std::size_t>(i)]);
        } catch (const std::exception& e) {
            errors[static_cast<std::size_t>(i)] = e.what();
        }
    }
    for (const std::string& e : errors)
        if (!e.empty()) throw std::runtime_error(e);
    std::sort(records.begin(), records.end(), record_key_less);
    return records;
}

std::string emit_csv(const std::vector<BenchRecord>& records) {
    std::string out = "family,n,k,seed,insertionOrder,totalQueries,maxPerInsertion,"
                      "unrootedComplexityFinal,heinBound,beanstalkBound,withinBound\n";
    for (const BenchRecord& r : records) {
        out += r.family;
        out += ',' + std::to_string(r.n);
        out += ',' + std::to_string(r.k);
        out += ',' + std::to_string(r.seed);
        out += ',' + r.insertion_order;
        out += ',' + std::to_string(r.total_queries);
        out += ',' + std::to_string(r.max_per_insertion);
        out += ',' + std::to_string(r.unrooted_complexity_final);
        out += ',' + std::to_string(r.hein_bound);
        out += ',';
        if (r.beanstalk_bound) out += std::to_string(*r.beanstalk_bound);
        out += ',';
        out += r.within_bound ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string emit_plot_data(const std::vector<BenchRecord>& records) {
    std::string out = "family,n,queriesPerLeaf,boundValue\n";
    for (const BenchRecord& r : records) {
        char ratio[64];
        std::snprintf(ratio, sizeof(ratio), "%.6f",
                      static_cast<double>(r.total_queries) / static_cast<double>(r.n));
        const long long bound = r.beanstalk_bound ? *r.beanstalk_bound : r.hein_bound + 2;
        out += r.family + ',' + std::to_string(r.n) + ',' + ratio + ',' + std::to_string(bound) + '\n';
    }
    return out;
}

} // namespace hein
