#include <folkman/store.hh>
#include <folkman/digest.hh>
#include <folkman/errors.hh>
#include <folkman/graph6_codec.hh>
#include <folkman/parallel.hh>

#include <fstream>
#include <sstream>

using std::string;
using std::vector;
namespace fs = std::filesystem;

namespace folkman
{
    GraphStore::GraphStore(const GraphStore & other)
    {
        std::scoped_lock lock{other._mutex};
        _keys = other._keys;
    }

    GraphStore::GraphStore(GraphStore && other) noexcept :
        _keys(std::move(other._keys))
    {
    }

    auto GraphStore::operator=(GraphStore other) -> GraphStore &
    {
        std::scoped_lock lock{_mutex};
        _keys = std::move(other._keys);
        return *this;
    }

    auto GraphStore::insert(const Graph & g) -> bool
    {
        return insert_key(canonical_form(g));
    }

    auto GraphStore::insert_key(CanonicalKey key) -> bool
    {
        std::scoped_lock lock{_mutex};
        return _keys.insert(std::move(key.bytes)).second;
    }

    auto GraphStore::contains(const Graph & g) const -> bool
    {
        return contains_key(canonical_form(g));
    }

    auto GraphStore::contains_key(const CanonicalKey & key) const -> bool
    {
        std::scoped_lock lock{_mutex};
        return _keys.contains(key.bytes);
    }

    auto GraphStore::size() const -> std::size_t
    {
        std::scoped_lock lock{_mutex};
        return _keys.size();
    }

    auto GraphStore::merge(const GraphStore & other) -> void
    {
        if (&other == this)
            return;
        std::scoped_lock lock{_mutex, other._mutex};
        _keys.insert(other._keys.begin(), other._keys.end());
    }

    auto GraphStore::keys() const -> vector<CanonicalKey>
    {
        std::scoped_lock lock{_mutex};
        vector<CanonicalKey> result;
        result.reserve(_keys.size());
        for (auto & k : _keys)
            result.push_back(CanonicalKey{k});
        return result;
    }

    auto GraphStore::graphs() const -> vector<Graph>
    {
        std::scoped_lock lock{_mutex};
        vector<Graph> result;
        result.reserve(_keys.size());
        for (auto & k : _keys)
            result.push_back(parse_graph6(k));
        return result;
    }

    auto GraphStore::serialise() const -> string
    {
        std::scoped_lock lock{_mutex};
        string result;
        for (auto & k : _keys) {
            result += k;
            result += '\n';
        }
        return result;
    }

    auto GraphStore::digest() const -> string
    {
        return sha256_hex(serialise());
    }

    auto GraphStore::save(const fs::path & file) const -> string
    {
        auto content = serialise();
        write_text_atomically(file, content);
        return sha256_hex(content);
    }

    auto GraphStore::load_canonical(const fs::path & file) -> GraphStore
    {
        GraphStore result;
        for (auto & line : read_graph6_lines(file))
            result._keys.insert(std::move(line));
        return result;
    }

    auto GraphStore::ingest(const fs::path & file, int workers) -> GraphStore
    {
        auto lines = read_graph6_lines(file);
        GraphStore result;
        parallel_for(lines.size(), workers, [&] (std::size_t i) {
                try {
                    result.insert(parse_graph6(lines[i]));
                }
                catch (const FolkmanError & e) {
                    throw StoreError(file.string() + " line " + std::to_string(i + 1) + ": " + e.what());
                }
            });
        return result;
    }

    auto read_graph6_lines(const fs::path & file) -> vector<string>
    {
        std::ifstream in{file, std::ios::binary};
        if (! in)
            throw StoreError("cannot read " + file.string());
        vector<string> result;
        string line;
        while (std::getline(in, line)) {
            auto stripped = graph6::strip(line);
            if (! stripped.empty())
                result.emplace_back(stripped);
        }
        if (in.bad())
            throw StoreError("read error on " + file.string());
        return result;
    }

    auto write_text_atomically(const fs::path & file, const string & content) -> void
    {
        if (file.has_parent_path())
            fs::create_directories(file.parent_path());
        auto temporary = file;
        temporary += ".partial";
        {
            std::ofstream out{temporary, std::ios::binary | std::ios::trunc};
            out << content;
            out.flush();
            if (! out)
                throw StoreError("cannot write " + temporary.string());
        }
        std::error_code ec;
        fs::rename(temporary, file, ec);
        if (ec)
            throw StoreError("cannot move " + temporary.string() + " into place: " + ec.message());
    }
}
