#ifndef FOLKMAN_GUARD_STORE_HH
#define FOLKMAN_GUARD_STORE_HH 1

#include <folkman/canon.hh>
#include <folkman/graph.hh>

#include <filesystem>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace folkman
{
    /**
     * Set of isomorphism classes keyed by canonical graph6.
     *
     * Insertion is thread safe. The serialised form is the sorted key list,
     * one line each, so it does not depend on insertion order.
     */
    class GraphStore
    {
        private:
            mutable std::mutex _mutex;
            std::set<std::string> _keys;

        public:
            GraphStore() = default;
            GraphStore(const GraphStore & other);
            GraphStore(GraphStore && other) noexcept;
            auto operator=(GraphStore other) -> GraphStore &;

            /// Returns true when no isomorphic copy was present.
            auto insert(const Graph & g) -> bool;

            /// The key must already be canonical.
            auto insert_key(CanonicalKey key) -> bool;

            auto contains(const Graph & g) const -> bool;
            auto contains_key(const CanonicalKey & key) const -> bool;
            auto size() const -> std::size_t;
            auto empty() const -> bool { return 0 == size(); }

            auto merge(const GraphStore & other) -> void;

            /// Keys in sorted order.
            auto keys() const -> std::vector<CanonicalKey>;

            /// Canonical representatives in key order.
            auto graphs() const -> std::vector<Graph>;

            /// Sorted keys joined by newlines, each line terminated.
            auto serialise() const -> std::string;

            auto digest() const -> std::string;

            /// Writes atomically through a temporary file. Returns the content digest.
            auto save(const std::filesystem::path & file) const -> std::string;

            /// Reads a file whose lines are known to be canonical keys.
            static auto load_canonical(const std::filesystem::path & file) -> GraphStore;

            /// Reads arbitrary graph6 lines, canonicalising and deduplicating them.
            static auto ingest(const std::filesystem::path & file, int workers = 1) -> GraphStore;
    };

    /// Graph6 lines of a text file, ignoring blank lines and an optional header.
    auto read_graph6_lines(const std::filesystem::path & file) -> std::vector<std::string>;

    auto write_text_atomically(const std::filesystem::path & file, const std::string & content) -> void;
}

#endif
