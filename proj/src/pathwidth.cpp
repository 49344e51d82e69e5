#include "treequest/pathwidth.hpp"

#include <algorithm>

namespace treequest {

Label combine_labels(Vertex root, std::vector<std::span<const LabelEntry>> children) {
    std::erase_if(children, [](std::span<const LabelEntry> s) { return s.empty(); });
    if (children.empty()) {
        return {{0, false, root}};
    }
    std::uint8_t top = 0;
    for (auto c : children) {
        top = std::max(top, c.front().level);
    }
    // Only single vertices below: a star.
    if (top == 0) {
        return {{1, false, root}};
    }

    std::size_t at_top = 0;
    std::size_t which = 0;
    bool any_critical = false;
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (children[i].front().level == top) {
            ++at_top;
            which = i;
            any_critical = any_critical || children[i].front().critical;
        }
    }
    const auto up = static_cast<std::uint8_t>(top + 1);
    if (at_top >= 3) {
        return {{up, false, root}};
    }
    if (at_top == 2) {
        // A critical vertex inside either branch sees both of its own heavy
        // children plus the other branch: three heavy components.
        if (any_critical) {
            return {{up, false, root}};
        }
        return {{top, true, root}};
    }
    if (!children[which].front().critical) {
        return {{top, false, root}};
    }

    // One heavy child with critical vertex c: the level rises iff what is left
    // after cutting c's subtree is itself heavy.
    Vertex c = children[which].front().vertex;
    children[which] = children[which].subspan(1);
    Label rest = combine_labels(root, std::move(children));
    if (rest.front().level >= top) {
        return {{up, false, root}};
    }
    Label out;
    out.reserve(rest.size() + 1);
    out.push_back({top, true, c});
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

ComponentLabeler::ComponentLabeler(const Tree& tree)
    : tree_(&tree), parent_(tree.size(), kNoVertex), subtree_pw_(tree.size(), 0) {}

Label ComponentLabeler::run(Vertex root, std::span<const std::uint8_t> blocked) {
    struct Frame {
        Vertex v;
        std::size_t next;
        std::size_t children;
    };
    order_.clear();
    std::vector<Frame> stack{{root, 0, 0}};
    std::vector<Label> labels;
    parent_[root] = root;
    order_.push_back(root);

    while (!stack.empty()) {
        Frame& f = stack.back();
        auto nb = tree_->neighbors(f.v);
        if (f.next < nb.size()) {
            Vertex w = nb[f.next++];
            if ((f.v != root && w == parent_[f.v]) || (!blocked.empty() && blocked[w])) {
                continue;
            }
            parent_[w] = f.v;
            ++f.children;
            order_.push_back(w);
            stack.push_back({w, 0, 0});
            continue;
        }
        const Vertex v = f.v;
        const std::size_t k = f.children;
        stack.pop_back();

        std::vector<std::span<const LabelEntry>> kids;
        kids.reserve(k);
        for (std::size_t i = labels.size() - k; i < labels.size(); ++i) {
            kids.emplace_back(labels[i]);
        }
        Label mine = combine_labels(v, std::move(kids));
        subtree_pw_[v] = mine.front().level;
        labels.resize(labels.size() - k);
        labels.push_back(std::move(mine));
    }
    return std::move(labels.back());
}

PathwidthResult pathwidth(const Tree& tree, Vertex root) {
    tree.check_vertex(root);
    ComponentLabeler labeler(tree);
    PathwidthResult result;
    result.root = root;
    result.root_label = labeler.run(root, {});
    result.value = result.root_label.front().level;
    result.parent.resize(tree.size());
    result.subtree_pathwidth.resize(tree.size());
    for (Vertex v = 0; v < tree.size(); ++v) {
        result.parent[v] = labeler.parent(v);
        result.subtree_pathwidth[v] = labeler.subtree_pathwidth(v);
    }
    return result;
}

}  // namespace treequest
