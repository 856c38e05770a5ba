#include "pslab/cache.hpp"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pslab/errors.hpp"
#include "pslab/sha256.hpp"

namespace fs = std::filesystem;

namespace pslab {

namespace {

std::string poly_canonical_text(const Poly& p) {
    // Terms sorted by raw exponent vector so the text does not depend on the
    // order the polynomial was built with.
    std::vector<const Term*> terms;
    for (const Term& t : p.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(),
              [](const Term* a, const Term* b) { return a->m.e < b->m.e; });
    std::ostringstream out;
    for (const Term* t : terms) {
        out << t->c.get_str() << ":";
        for (size_t v = 0; v < t->m.e.size(); ++v) {
            if (v) out << ",";
            out << t->m.e[v];
        }
        out << ";";
    }
    return out.str();
}

std::string poly_line(const Poly& p) {
    std::ostringstream out;
    for (const Term& t : p.terms()) {
        out << t.c.get_str() << ":";
        for (size_t v = 0; v < t.m.e.size(); ++v) {
            if (v) out << ",";
            out << t.m.e[v];
        }
        out << " ";
    }
    return out.str();
}

Poly parse_poly_line(const std::string& line, int nvars) {
    std::vector<Term> terms;
    std::istringstream in(line);
    std::string chunk;
    while (in >> chunk) {
        size_t colon = chunk.find(':');
        if (colon == std::string::npos) throw InputError("cache: malformed term");
        Rational c = parse_rational(chunk.substr(0, colon));
        std::vector<exp_t> e;
        e.reserve(nvars);
        std::istringstream es(chunk.substr(colon + 1));
        std::string num;
        while (std::getline(es, num, ',')) e.push_back(static_cast<exp_t>(std::stoi(num)));
        if (static_cast<int>(e.size()) != nvars) throw InputError("cache: wrong arity");
        terms.push_back({Monomial(std::move(e)), std::move(c)});
    }
    return Poly(std::move(terms));
}

} // namespace

std::string serialize_gb(const ReducedGB& gb, const PolyRing& ring) {
    std::ostringstream out;
    out << "pslab-gb 1\n";
    out << "nvars " << ring.nvars() << "\n";
    out << "names";
    for (const auto& n : ring.names) out << " " << n;
    out << "\n";
    out << "order " << gb.order().descriptor() << "\n";
    out << "elements " << gb.size() << "\n";
    for (const Poly& p : gb.elements()) out << poly_line(p) << "\n";
    return out.str();
}

ReducedGB deserialize_gb(const std::string& text, const MonomialOrder& expected_order) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "pslab-gb 1") throw InputError("cache: bad header");
    int nvars = 0;
    size_t count = 0;
    std::string order_desc;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "nvars") {
            ls >> nvars;
        } else if (key == "names") {
            // informational
        } else if (key == "order") {
            ls >> order_desc;
        } else if (key == "elements") {
            ls >> count;
            break;
        }
    }
    if (order_desc != expected_order.descriptor())
        throw InputError("cache: order descriptor mismatch");
    std::vector<Poly> elems;
    for (size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) throw InputError("cache: truncated file");
        elems.push_back(parse_poly_line(line, nvars));
    }
    return ReducedGB(expected_order, std::move(elems));
}

GbCache::GbCache(std::string directory) : dir_(std::move(directory)) {
    fs::create_directories(dir_);
}

std::string GbCache::cache_key(const std::vector<Poly>& generators, const MonomialOrder& order,
                               const PolyRing& ring) {
    std::vector<std::string> canon;
    canon.reserve(generators.size());
    for (const Poly& p : generators) canon.push_back(poly_canonical_text(p));
    std::sort(canon.begin(), canon.end());
    std::ostringstream key;
    key << ring.nvars() << "\n";
    for (const auto& n : ring.names) key << n << " ";
    key << "\n" << order.descriptor() << "\n";
    for (const auto& c : canon) key << c << "\n";
    return sha256_hex(key.str());
}

std::shared_ptr<const ReducedGB> GbCache::get_or_compute(const std::vector<Poly>& generators,
                                                         const MonomialOrder& order,
                                                         const PolyRing& ring,
                                                         const GroebnerLimits& limits) {
    const std::string key = cache_key(generators, order, ring);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memory_.find(key);
        if (it != memory_.end()) {
            ++hits_;
            return it->second;
        }
    }
    fs::path file = fs::path(dir_) / (key + ".gb");
    if (fs::exists(file)) {
        std::ifstream in(file, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        auto gb = std::make_shared<ReducedGB>(deserialize_gb(buf.str(), order));
        std::lock_guard<std::mutex> lock(mutex_);
        ++hits_;
        memory_.emplace(key, gb);
        return gb;
    }
    auto gb = std::make_shared<ReducedGB>(buchberger(generators, order, limits));
    std::string payload = serialize_gb(*gb, ring);
    fs::path tmp = fs::path(dir_) / (key + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary);
        out << payload;
    }
    std::error_code ec;
    fs::rename(tmp, file, ec);
    if (ec) fs::remove(tmp, ec);
    std::lock_guard<std::mutex> lock(mutex_);
    ++misses_;
    memory_.emplace(key, gb);
    return gb;
}

} // namespace pslab
