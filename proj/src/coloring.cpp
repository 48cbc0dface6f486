#include <symlab/aut.hpp>

#include <algorithm>
#include <numeric>

namespace symlab {

Coloring Coloring::uniform(int n)
{
    Coloring c;
    c.labels_.assign(n, 1);
    c.num_labels_ = n > 0 ? 1 : 0;
    return c;
}

Coloring Coloring::from_labels(std::vector<int> labels)
{
    int d = 0;
    for (int l : labels) {
        if (l < 1)
            throw ColoringError("label " + std::to_string(l) + " is not positive");
        d = std::max(d, l);
    }
    std::vector<char> used(d + 1, 0);
    for (int l : labels)
        used[l] = 1;
    for (int l = 1; l <= d; ++l)
        if (!used[l])
            throw ColoringError("labels must form 1.." + std::to_string(d) + " but " + std::to_string(l) + " is unused");
    Coloring c;
    c.labels_ = std::move(labels);
    c.num_labels_ = d;
    return c;
}

Coloring Coloring::from_keys(std::span<const int> keys)
{
    std::vector<int> sorted(keys.begin(), keys.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Coloring c;
    c.labels_.resize(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v)
        c.labels_[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin()) + 1;
    c.num_labels_ = static_cast<int>(sorted.size());
    return c;
}

std::vector<VertexSet> Coloring::classes() const
{
    std::vector<VertexSet> out(num_labels_);
    for (int v = 0; v < order(); ++v)
        out[labels_[v] - 1].push_back(v);
    return out;
}

std::vector<int> Coloring::class_sizes() const
{
    std::vector<int> out(num_labels_, 0);
    for (int l : labels_)
        ++out[l - 1];
    return out;
}

} // namespace symlab
