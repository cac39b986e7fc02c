#include "derivar/cache.hpp"

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>

namespace derivar {

namespace {

std::uint64_t fnv64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

std::string serialize(const Component& c) {
    std::ostringstream os;
    os << "derivar-component 1\n";
    os << "presentation-hash " << hex64(c.presentation_hash) << '\n';
    os << "arity " << c.arity << '\n';
    os << "alphabet " << c.alphabet_size << '\n';
    os << "ambient " << c.relations.ambient() << '\n';
    os << "rank " << c.relations.dim() << '\n';
    os << "pivots";
    for (std::size_t p : c.relations.pivots()) os << ' ' << p;
    os << '\n';
    for (std::size_t i = 0; i < c.relations.dim(); ++i) {
        os << "row";
        for (std::size_t j = 0; j < c.relations.ambient(); ++j)
            os << ' ' << rat_to_string(c.relations.basis().at(i, j));
        os << '\n';
    }
    return os.str();
}

}  // namespace

ComponentDiskCache::ComponentDiskCache(std::filesystem::path dir, bool verbose)
    : dir_(std::move(dir)), verbose_(verbose) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
        std::cerr << "warning: cache directory " << dir_ << " unusable (" << ec.message()
                  << "); caching disabled\n";
        usable_ = false;
    }
}

std::filesystem::path ComponentDiskCache::entry_path(const OperadPresentation& p, int arity) const {
    return dir_ / (hex64(p.content_hash()) + "_n" + std::to_string(arity) + ".comp");
}

std::optional<Component> ComponentDiskCache::load(const OperadPresentation& p, int arity) {
    if (!usable_) return std::nullopt;
    std::ifstream in(entry_path(p, arity));
    if (!in) {
        if (verbose_) std::cerr << "cache miss: " << entry_path(p, arity).filename().string() << '\n';
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string body = buf.str();

    // checksum trailer guards against torn or bit-rotted entries
    auto nl = body.rfind("checksum ");
    if (nl == std::string::npos) return std::nullopt;
    std::string payload = body.substr(0, nl);
    std::istringstream trailer(body.substr(nl));
    std::string kw, sum;
    trailer >> kw >> sum;
    if (sum != hex64(fnv64(payload))) return std::nullopt;

    try {
        std::istringstream is(payload);
        std::string magic;
        int version = 0;
        is >> magic >> version;
        if (magic != "derivar-component" || version != 1) return std::nullopt;
        std::string key, hash;
        is >> key >> hash;
        if (key != "presentation-hash" || hash != hex64(p.content_hash())) return std::nullopt;
        Component c;
        c.presentation_hash = p.content_hash();
        std::size_t ambient = 0, rank = 0;
        is >> key >> c.arity >> key >> c.alphabet_size >> key >> ambient >> key >> rank;
        if (c.arity != arity || c.alphabet_size != p.alphabet_size()) return std::nullopt;
        if (ambient != basis_size(arity, c.alphabet_size)) return std::nullopt;
        is >> key;
        if (key != "pivots") return std::nullopt;
        std::vector<std::size_t> pivots(rank);
        for (auto& pv : pivots) is >> pv;
        Matrix rows(rank, ambient);
        for (std::size_t i = 0; i < rank; ++i) {
            is >> key;
            if (key != "row") return std::nullopt;
            for (std::size_t j = 0; j < ambient; ++j) {
                std::string tok;
                is >> tok;
                rows.at(i, j) = rat_from_string(tok);
            }
        }
        if (!is) return std::nullopt;
        c.relations = Subspace::from_rows(rows);
        if (c.relations.pivots() != pivots) return std::nullopt;
        std::size_t pi = 0;
        for (std::size_t col = 0; col < ambient; ++col) {
            if (pi < pivots.size() && pivots[pi] == col) ++pi;
            else c.normal_basis.push_back(col);
        }
        c.dim = c.normal_basis.size();
        if (verbose_) std::cerr << "cache hit: " << entry_path(p, arity).filename().string() << '\n';
        return c;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void ComponentDiskCache::store(const OperadPresentation& p, int arity, const Component& c) {
    if (!usable_) return;
    try {
        std::string payload = serialize(c);
        std::string body = payload + "checksum " + hex64(fnv64(payload)) + "\n";
        std::filesystem::path final_path = entry_path(p, arity);
        std::filesystem::path tmp =
            dir_ / ("tmp-" + std::to_string(::getpid()) + "-" + hex64(fnv64(final_path.string())));
        {
            std::ofstream out(tmp, std::ios::trunc);
            out << body;
            if (!out) throw std::runtime_error("write failed");
        }
        std::filesystem::rename(tmp, final_path);
        if (verbose_) std::cerr << "cache store: " << final_path.filename().string() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "warning: cache write failed (" << e.what() << "); caching disabled\n";
        usable_ = false;
    }
}

}  // namespace derivar
