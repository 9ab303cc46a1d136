#pragma once

#include <cstring>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tzdesk/crypto.hpp"
#include "tzdesk/util.hpp"

namespace tzdesk::ledger {

// Immutable key-value store with structural sharing. The tree is a treap
// whose priorities are derived from the keys, so its shape (and therefore its
// root hash) depends only on the contents, never on insertion order. Every
// node carries the digest of its subtree, which makes context_hash O(1).
class Context {
    struct Node;
    using Ptr = std::shared_ptr<const Node>;

    struct Node {
        std::string key;
        std::string val;
        Ptr left, right;
        std::uint64_t prio;
        crypto::Digest hash;
        std::size_t count;
    };

public:
    Context() = default;

    static std::string join(const std::vector<std::string>& path)
    {
        std::string key;
        for (size_t i = 0; i < path.size(); ++i) {
            if (i)
                key.push_back('/');
            key += path[i];
        }
        return key;
    }

    std::optional<std::string> get(std::string_view key) const
    {
        const Node* n = root_.get();
        while (n) {
            if (key < n->key)
                n = n->left.get();
            else if (key > n->key)
                n = n->right.get();
            else
                return n->val;
        }
        return std::nullopt;
    }

    std::optional<std::string> get(const std::vector<std::string>& path) const
    {
        return get(join(path));
    }

    [[nodiscard]] Context set(std::string_view key, std::string_view val) const
    {
        auto [l, r] = split(root_, key);
        return Context(merge(merge(l, make(key, val)), r));
    }

    [[nodiscard]] Context set(const std::vector<std::string>& path, std::string_view val) const
    {
        return set(join(path), val);
    }

    [[nodiscard]] Context del(std::string_view key) const
    {
        auto [l, r] = split(root_, key);
        return Context(merge(l, r));
    }

    [[nodiscard]] Context del(const std::vector<std::string>& path) const
    {
        return del(join(path));
    }

    std::size_t size() const { return root_ ? root_->count : 0; }
    bool empty() const { return !root_; }

    // 32-byte digest of the full contents.
    std::string hash() const
    {
        crypto::Digest d = root_ ? root_->hash : empty_digest();
        return std::string(reinterpret_cast<const char*>(d.data()), d.size());
    }

    std::string hash_hex() const { return to_hex(hash()); }

    bool operator==(const Context& o) const { return hash() == o.hash(); }

    // In-order visit of every (key, value) whose key starts with `prefix`.
    void for_each_prefix(std::string_view prefix,
                         const std::function<void(const std::string&, const std::string&)>& fn) const
    {
        scan(root_, prefix, fn);
    }

    void for_each(const std::function<void(const std::string&, const std::string&)>& fn) const
    {
        for_each_prefix("", fn);
    }

private:
    explicit Context(Ptr root) : root_(std::move(root)) {}

    static crypto::Digest empty_digest()
    {
        return crypto::sha256("tzdesk:context:empty");
    }

    static Ptr make(std::string_view key, std::string_view val, Ptr left = nullptr, Ptr right = nullptr)
    {
        auto n = std::make_shared<Node>();
        n->key = std::string(key);
        n->val = std::string(val);
        n->left = std::move(left);
        n->right = std::move(right);
        auto kd = crypto::sha256("tzdesk:context:prio:" + n->key);
        std::memcpy(&n->prio, kd.data(), sizeof n->prio);
        n->count = 1 + (n->left ? n->left->count : 0) + (n->right ? n->right->count : 0);
        n->hash = node_digest(*n);
        return n;
    }

    static Ptr rebuild(const Node& base, Ptr left, Ptr right)
    {
        auto n = std::make_shared<Node>();
        n->key = base.key;
        n->val = base.val;
        n->left = std::move(left);
        n->right = std::move(right);
        n->prio = base.prio;
        n->count = 1 + (n->left ? n->left->count : 0) + (n->right ? n->right->count : 0);
        n->hash = node_digest(*n);
        return n;
    }

    static crypto::Digest node_digest(const Node& n)
    {
        auto u32 = [](std::size_t v) {
            std::string s(4, '\0');
            s[0] = static_cast<char>((v >> 24) & 0xff);
            s[1] = static_cast<char>((v >> 16) & 0xff);
            s[2] = static_cast<char>((v >> 8) & 0xff);
            s[3] = static_cast<char>(v & 0xff);
            return s;
        };
        std::string buf;
        buf.reserve(74 + n.key.size() + n.val.size());
        crypto::Digest l = n.left ? n.left->hash : empty_digest();
        crypto::Digest r = n.right ? n.right->hash : empty_digest();
        buf.append(reinterpret_cast<const char*>(l.data()), l.size());
        buf += u32(n.key.size());
        buf += n.key;
        buf += u32(n.val.size());
        buf += n.val;
        buf.append(reinterpret_cast<const char*>(r.data()), r.size());
        return crypto::sha256(buf);
    }

    // true when node `a` outranks `b` as a treap root; total and
    // content-determined so the tree shape is canonical
    static bool outranks(const Node& a, const Node& b)
    {
        if (a.prio != b.prio)
            return a.prio > b.prio;
        return a.key < b.key;
    }

    // keys < key go left, keys > key go right, an exact match is dropped
    static std::pair<Ptr, Ptr> split(const Ptr& t, std::string_view key)
    {
        if (!t)
            return {nullptr, nullptr};
        if (t->key < key) {
            auto [l, r] = split(t->right, key);
            return {rebuild(*t, t->left, std::move(l)), std::move(r)};
        }
        if (t->key > key) {
            auto [l, r] = split(t->left, key);
            return {std::move(l), rebuild(*t, std::move(r), t->right)};
        }
        return {t->left, t->right};
    }

    static Ptr merge(const Ptr& a, const Ptr& b)
    {
        if (!a)
            return b;
        if (!b)
            return a;
        if (outranks(*a, *b))
            return rebuild(*a, a->left, merge(a->right, b));
        return rebuild(*b, merge(a, b->left), b->right);
    }

    static void scan(const Ptr& t, std::string_view prefix,
                     const std::function<void(const std::string&, const std::string&)>& fn)
    {
        if (!t)
            return;
        // prune subtrees that cannot contain keys with the prefix
        bool left_possible = t->key >= prefix;
        bool here = t->key.size() >= prefix.size() && std::string_view(t->key).substr(0, prefix.size()) == prefix;
        bool right_possible = std::string_view(t->key).substr(0, prefix.size()) <= prefix;
        if (left_possible)
            scan(t->left, prefix, fn);
        if (here)
            fn(t->key, t->val);
        if (right_possible || here)
            scan(t->right, prefix, fn);
    }

    Ptr root_;
};

} // namespace tzdesk::ledger
