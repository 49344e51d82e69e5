#include "treequest/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace treequest {

namespace {

// Follows the unique heavy child (subtree pathwidth k) down from `from`, then
// keeps going through the widest child (smallest id on ties) until a leaf.
std::vector<Vertex> walk_down(const Tree& tree, const ComponentLabeler& lab, Vertex from, std::uint8_t k,
                              std::span<const std::uint8_t> blocked) {
    std::vector<Vertex> out{from};
    Vertex u = from;
    for (;;) {
        Vertex next = kNoVertex;
        int heavy = 0;
        for (Vertex w : tree.neighbors(u)) {
            if (blocked[w] || w == lab.parent(u)) {
                continue;
            }
            heavy += lab.subtree_pathwidth(w) == k;
            if (next == kNoVertex || lab.subtree_pathwidth(w) > lab.subtree_pathwidth(next)) {
                next = w;
            }
        }
        if (heavy > 1) {
            throw InvariantError("spine extraction: two heavy children below a non-critical vertex");
        }
        if (next == kNoVertex) {
            return out;
        }
        out.push_back(next);
        u = next;
    }
}

PathInTree spine_from_label(const Tree& tree, const ComponentLabeler& lab, Vertex root, const Label& label,
                            std::span<const std::uint8_t> blocked) {
    const LabelEntry head = label.front();
    if (head.level == 0) {
        return PathInTree({root});
    }
    if (!head.critical) {
        return PathInTree(walk_down(tree, lab, root, head.level, blocked));
    }
    // Critical vertex v: the spine runs through v between its two heavy children.
    const Vertex v = head.vertex;
    std::vector<Vertex> heavy;
    for (Vertex w : tree.neighbors(v)) {
        if (!blocked[w] && w != lab.parent(v) && lab.subtree_pathwidth(w) == head.level) {
            heavy.push_back(w);
        }
    }
    if (heavy.size() != 2) {
        throw InvariantError("spine extraction: critical vertex without exactly two heavy children");
    }
    std::vector<Vertex> path = walk_down(tree, lab, heavy[0], head.level, blocked);
    std::reverse(path.begin(), path.end());
    path.push_back(v);
    auto right = walk_down(tree, lab, heavy[1], head.level, blocked);
    path.insert(path.end(), right.begin(), right.end());
    return PathInTree(std::move(path));
}

}  // namespace

std::uint32_t SpineDecomposition::max_depth() const {
    std::uint32_t d = 0;
    for (const auto& s : spines_) {
        d = std::max(d, s.depth);
    }
    return d;
}

bool SpineDecomposition::contains(SpineId comp, Vertex v) const {
    SpineId s = placement(v).spine;
    const std::uint32_t target_depth = spine(comp).depth;
    while (spines_[s].depth > target_depth) {
        s = spines_[s].parent;
    }
    return s == comp;
}

Vertex SpineDecomposition::anchor(Vertex v, SpineId comp) const {
    SpineId s = placement(v).spine;
    if (s == comp) {
        return v;
    }
    return spines_[child_containing(comp, v)].attachment;
}

SpineId SpineDecomposition::child_containing(SpineId comp, Vertex v) const {
    SpineId s = placement(v).spine;
    const std::uint32_t target_depth = spine(comp).depth + 1;
    while (spines_[s].depth > target_depth) {
        s = spines_[s].parent;
    }
    if (spines_[s].depth != target_depth || spines_[s].parent != comp) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not below component " +
                                    std::to_string(comp));
    }
    return s;
}

std::vector<Edge> SpineDecomposition::boundary(SpineId comp) const {
    std::vector<Edge> out;
    for (SpineId a = comp; a != kNoSpine; a = spines_[a].parent) {
        const Spine& sp = spines_[a];
        if (sp.parent == kNoSpine) {
            break;
        }
        if (a == comp || contains(comp, sp.entry)) {
            out.emplace_back(sp.entry, sp.attachment);
        }
    }
    return out;
}

bool operator==(const SpineDecomposition& a, const SpineDecomposition& b) {
    if (a.spines_.size() != b.spines_.size() || a.placement_.size() != b.placement_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.spines_.size(); ++i) {
        const Spine& x = a.spines_[i];
        const Spine& y = b.spines_[i];
        if (x.id != y.id || x.level != y.level || x.parent != y.parent || x.attachment != y.attachment ||
            x.entry != y.entry || x.depth != y.depth || x.component_size != y.component_size || !(x.path == y.path)) {
            return false;
        }
    }
    for (std::size_t v = 0; v < a.placement_.size(); ++v) {
        const Placement& p = a.placement_[v];
        const Placement& q = b.placement_[v];
        if (p.spine != q.spine || p.position != q.position || p.level != q.level) {
            return false;
        }
    }
    return true;
}

PathInTree find_spine(const Tree& tree) {
    ComponentLabeler lab(tree);
    std::vector<std::uint8_t> blocked(tree.size(), 0);
    Label label = lab.run(0, blocked);
    return spine_from_label(tree, lab, 0, label, blocked);
}

bool verify_spine(const Tree& tree, const PathInTree& path, unsigned level) {
    if (path.empty() || !path.is_valid_in(tree)) {
        return false;
    }
    std::vector<std::uint8_t> blocked(tree.size(), 0);
    for (Vertex v : path.vertices()) {
        blocked[v] = 1;
    }
    ComponentLabeler lab(tree);
    for (Vertex v : path.vertices()) {
        for (Vertex w : tree.neighbors(v)) {
            if (!blocked[w] && lab.run(w, blocked).front().level >= level) {
                return false;
            }
        }
    }
    return true;
}

SpineDecomposition build_decomposition(const Tree& tree) {
    struct Job {
        Vertex entry;
        SpineId parent;
        Vertex attachment;
    };
    const std::size_t n = tree.size();
    std::vector<std::uint8_t> blocked(n, 0);
    ComponentLabeler lab(tree);
    SpineDecomposition d;
    d.placement_.assign(n, Placement{});

    std::deque<Job> queue{{0, kNoSpine, kNoVertex}};
    while (!queue.empty()) {
        const Job job = queue.front();
        queue.pop_front();

        Label label = lab.run(job.entry, blocked);
        Spine sp;
        sp.id = static_cast<SpineId>(d.spines_.size());
        sp.level = label.front().level;
        sp.parent = job.parent;
        sp.attachment = job.attachment;
        sp.component_size = lab.component().size();
        if (job.parent != kNoSpine) {
            const Spine& up = d.spines_[job.parent];
            // Residual pathwidth must drop; this is the spine's certificate.
            if (sp.level >= up.level) {
                throw InvariantError("residual component at vertex " + std::to_string(job.entry) +
                                     " has pathwidth " + std::to_string(sp.level) + ", spine level " +
                                     std::to_string(up.level));
            }
            sp.entry = job.entry;
            sp.depth = up.depth + 1;
        }
        sp.path = spine_from_label(tree, lab, job.entry, label, blocked);

        const auto verts = sp.path.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            blocked[verts[i]] = 1;
            d.placement_[verts[i]] = {sp.id, static_cast<std::uint32_t>(i), sp.level};
        }
        for (Vertex v : verts) {
            for (Vertex w : tree.neighbors(v)) {
                if (!blocked[w]) {
                    queue.push_back({w, sp.id, v});
                }
            }
        }
        d.spines_.push_back(std::move(sp));
    }
    return d;
}

SpineDecomposition assemble_decomposition(const Tree& tree, std::vector<Spine> spines) {
    const std::size_t n = tree.size();
    if (spines.empty()) {
        throw InputError("decomposition has no spines");
    }
    SpineDecomposition d;
    d.placement_.assign(n, Placement{});
    for (std::size_t i = 0; i < spines.size(); ++i) {
        Spine& sp = spines[i];
        if (sp.id != i) {
            throw InputError("spine ids must be consecutive from 0");
        }
        if ((i == 0) != (sp.parent == kNoSpine) || (i > 0 && sp.parent >= i)) {
            throw InputError("spine " + std::to_string(i) + " has a bad parent");
        }
        if (sp.path.empty()) {
            throw InputError("spine " + std::to_string(i) + " is empty");
        }
        sp.depth = i == 0 ? 0 : spines[sp.parent].depth + 1;
        const auto verts = sp.path.vertices();
        for (std::size_t p = 0; p < verts.size(); ++p) {
            if (verts[p] >= n || d.placement_[verts[p]].spine != kNoSpine) {
                throw InputError("spine " + std::to_string(i) + " repeats or overflows a vertex");
            }
            d.placement_[verts[p]] = {sp.id, static_cast<std::uint32_t>(p), sp.level};
        }
        if (i > 0 && (sp.attachment >= n || d.placement_[sp.attachment].spine != sp.parent)) {
            throw InputError("spine " + std::to_string(i) + " attachment is not on its parent spine");
        }
        sp.component_size = 0;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (d.placement_[v].spine == kNoSpine) {
            throw InputError("vertex " + std::to_string(v) + " is on no spine");
        }
    }
    d.spines_ = std::move(spines);
    for (Vertex v = 0; v < n; ++v) {
        for (SpineId s = d.placement_[v].spine; s != kNoSpine; s = d.spines_[s].parent) {
            ++d.spines_[s].component_size;
        }
    }
    for (std::size_t i = 1; i < d.spines_.size(); ++i) {
        Spine& sp = d.spines_[i];
        sp.entry = kNoVertex;
        for (Vertex w : tree.neighbors(sp.attachment)) {
            if (d.contains(sp.id, w)) {
                sp.entry = w;
                break;
            }
        }
        if (sp.entry == kNoVertex) {
            throw InputError("spine " + std::to_string(i) + " is not adjacent to its attachment");
        }
    }
    return d;
}

std::vector<std::string> check_decomposition(const Tree& tree, const SpineDecomposition& d) {
    std::vector<std::string> bad;
    auto report = [&](std::string msg) {
        if (bad.size() < 64) {
            bad.push_back(std::move(msg));
        }
    };
    const std::size_t n = tree.size();
    if (d.vertex_count() != n || d.spine_count() == 0) {
        report("decomposition size does not match the tree");
        return bad;
    }

    std::vector<std::uint32_t> seen(n, 0);
    for (std::size_t i = 0; i < d.spine_count(); ++i) {
        const Spine& s = d.spine(static_cast<SpineId>(i));
        const std::string tag = "spine " + std::to_string(i) + ": ";
        if (s.id != i) {
            report(tag + "id mismatch");
        }
        if (s.path.empty() || !s.path.is_valid_in(tree)) {
            report(tag + "not a path in the tree");
            continue;
        }
        for (std::size_t p = 0; p < s.path.size(); ++p) {
            const Vertex v = s.path[p];
            ++seen[v];
            const Placement& pl = d.placement(v);
            if (pl.spine != s.id || pl.position != p || pl.level != s.level) {
                report(tag + "placement of vertex " + std::to_string(v) + " disagrees");
            }
        }
        if (i == 0) {
            if (s.parent != kNoSpine || s.depth != 0) {
                report(tag + "root spine has a parent");
            }
            continue;
        }
        if (s.parent >= i) {
            report(tag + "parent does not precede child");
            continue;
        }
        const Spine& up = d.spine(s.parent);
        if (s.level >= up.level) {
            report(tag + "level does not decrease below parent");
        }
        if (s.depth != up.depth + 1) {
            report(tag + "depth is inconsistent");
        }
        if (s.attachment >= n || d.placement(s.attachment).spine != s.parent) {
            report(tag + "attachment is not on the parent spine");
        } else if (s.entry >= n || !tree.adjacent(s.attachment, s.entry)) {
            report(tag + "entry is not adjacent to the attachment");
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v] != 1) {
            report("vertex " + std::to_string(v) + " lies on " + std::to_string(seen[v]) + " spines");
        }
    }
    if (!bad.empty()) {
        return bad;
    }

    if (d.pathwidth() != pathwidth(tree).value) {
        report("root spine level differs from the tree's pathwidth");
    }

    // Layer by depth: the hosts at depth h are the components left after
    // deleting every spine of smaller depth.
    std::vector<std::vector<SpineId>> layers(d.max_depth() + 1);
    for (const Spine& s : d.spines()) {
        layers[s.depth].push_back(s.id);
    }
    std::vector<std::uint8_t> blocked(n, 0);
    std::size_t free_count = n;
    ComponentLabeler lab(tree);
    for (const auto& layer : layers) {
        std::size_t covered = 0;
        for (SpineId id : layer) {
            const Spine& s = d.spine(id);
            const std::string tag = "spine " + std::to_string(id) + ": ";
            Label label = lab.run(s.path.front(), blocked);
            if (label.front().level != s.level) {
                report(tag + "level " + std::to_string(s.level) + " but host component has pathwidth " +
                       std::to_string(label.front().level));
            }
            const auto comp = lab.component();
            covered += comp.size();
            if (comp.size() != s.component_size) {
                report(tag + "recorded component size is wrong");
            }
            for (Vertex v : comp) {
                if (!d.contains(id, v)) {
                    report(tag + "host component leaks vertex " + std::to_string(v));
                    break;
                }
            }
            if (s.parent != kNoSpine && !d.contains(id, s.entry)) {
                report(tag + "entry lies outside the component");
            }
        }
        if (covered != free_count) {
            report("a residual component at depth " + std::to_string(d.spine(layer.front()).depth) +
                   " carries no spine");
        }
        for (SpineId id : layer) {
            for (Vertex v : d.spine(id).path.vertices()) {
                blocked[v] = 1;
                --free_count;
            }
        }
    }
    return bad;
}

}  // namespace treequest
