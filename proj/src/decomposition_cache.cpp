#include "treequest/decomposition_cache.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace treequest {

namespace {

constexpr const char* kMagic = "treequest-decomposition v1";

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, x);
    return buf;
}

long long signed_id(std::uint32_t x) {
    return x == static_cast<std::uint32_t>(-1) ? -1 : static_cast<long long>(x);
}

std::uint32_t from_signed(long long x) {
    return x < 0 ? static_cast<std::uint32_t>(-1) : static_cast<std::uint32_t>(x);
}

[[noreturn]] void corrupt(std::size_t line, const std::string& what) {
    throw InputError("decomposition cache line " + std::to_string(line) + ": " + what);
}

}  // namespace

void write_decomposition(std::ostream& out, const Tree& tree, const SpineDecomposition& decomp) {
    out << kMagic << '\n';
    out << "tree " << hex64(tree.fingerprint()) << ' ' << tree.size() << ' ' << decomp.spine_count() << '\n';
    for (Vertex v = 0; v < decomp.vertex_count(); ++v) {
        const Placement& p = decomp.placement(v);
        out << "V " << v << ' ' << p.spine << ' ' << p.position << ' ' << unsigned(p.level) << '\n';
    }
    for (const Spine& s : decomp.spines()) {
        out << "S " << s.id << ' ' << unsigned(s.level) << ' ' << signed_id(s.parent) << ' '
            << signed_id(s.attachment);
        for (Vertex v : s.path.vertices()) {
            out << ' ' << v;
        }
        out << '\n';
    }
}

SpineDecomposition read_decomposition(std::istream& in, const Tree& tree) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        ++lineno;
        return static_cast<bool>(std::getline(in, line));
    };

    if (!next_line() || line != kMagic) {
        corrupt(lineno, "missing or unknown header");
    }
    if (!next_line()) {
        corrupt(lineno, "missing tree record");
    }
    std::size_t n = 0;
    std::size_t count = 0;
    {
        std::istringstream ss(line);
        std::string tag;
        std::string hash;
        if (!(ss >> tag >> hash >> n >> count) || tag != "tree") {
            corrupt(lineno, "bad tree record");
        }
        if (hash != hex64(tree.fingerprint()) || n != tree.size()) {
            corrupt(lineno, "cache belongs to a different tree");
        }
    }

    std::vector<Placement> placements(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!next_line()) {
            corrupt(lineno, "truncated vertex records");
        }
        std::istringstream ss(line);
        std::string tag;
        std::size_t v = 0;
        std::uint32_t spine = 0;
        std::uint32_t pos = 0;
        unsigned level = 0;
        if (!(ss >> tag >> v >> spine >> pos >> level) || tag != "V" || v != i || level > 255) {
            corrupt(lineno, "bad vertex record");
        }
        placements[i] = {spine, pos, static_cast<std::uint8_t>(level)};
    }

    std::vector<Spine> spines;
    spines.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (!next_line()) {
            corrupt(lineno, "truncated spine records");
        }
        std::istringstream ss(line);
        std::string tag;
        std::uint32_t id = 0;
        unsigned level = 0;
        long long parent = 0;
        long long attachment = 0;
        if (!(ss >> tag >> id >> level >> parent >> attachment) || tag != "S" || level > 255) {
            corrupt(lineno, "bad spine record");
        }
        std::vector<Vertex> verts;
        Vertex v = 0;
        while (ss >> v) {
            verts.push_back(v);
        }
        if (!ss.eof()) {
            corrupt(lineno, "bad vertex in spine record");
        }
        Spine sp;
        sp.id = id;
        sp.level = static_cast<std::uint8_t>(level);
        sp.parent = from_signed(parent);
        sp.attachment = from_signed(attachment);
        sp.path = PathInTree(std::move(verts));
        spines.push_back(std::move(sp));
    }
    if (next_line() && !line.empty()) {
        corrupt(lineno, "trailing data");
    }

    SpineDecomposition d = assemble_decomposition(tree, std::move(spines));
    for (Vertex v = 0; v < n; ++v) {
        const Placement& p = d.placement(v);
        if (p.spine != placements[v].spine || p.position != placements[v].position ||
            p.level != placements[v].level) {
            throw InputError("decomposition cache: vertex record " + std::to_string(v) +
                             " disagrees with spine records");
        }
    }
    auto problems = check_decomposition(tree, d);
    if (!problems.empty()) {
        throw InputError("decomposition cache is invalid: " + problems.front());
    }
    return d;
}

std::filesystem::path cache_file_for(const Tree& tree, const std::filesystem::path& dir) {
    return dir / ("tree-" + hex64(tree.fingerprint()) + ".dec");
}

CachedDecomposition load_or_build_decomposition(const Tree& tree, const std::filesystem::path& dir) {
    CachedDecomposition out;
    const auto file = cache_file_for(tree, dir);
    if (std::filesystem::exists(file)) {
        std::ifstream in(file);
        try {
            out.decomposition = read_decomposition(in, tree);
            out.status = CacheStatus::Hit;
            return out;
        } catch (const std::exception& e) {
            out.warning = "ignoring cache " + file.string() + " (" + e.what() + "); rebuilding";
            out.status = CacheStatus::Rebuilt;
        }
    }
    out.decomposition = build_decomposition(tree);
    std::filesystem::create_directories(dir);
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream o(tmp);
        write_decomposition(o, tree, out.decomposition);
        if (!o) {
            throw InputError("cannot write decomposition cache " + tmp);
        }
    }
    std::filesystem::rename(tmp, file);
    return out;
}

}  // namespace treequest
