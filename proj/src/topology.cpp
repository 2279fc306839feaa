#include "vislab/topology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace vislab {

DisjointSet::DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

std::size_t DisjointSet::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool DisjointSet::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
}

namespace {

ComponentLabeling relabel(DisjointSet& ds, const std::vector<std::uint8_t>& active,
                          const std::function<Complex(std::size_t)>& pos) {
    ComponentLabeling out;
    out.labels.assign(active.size(), -1);
    std::unordered_map<std::size_t, int> id;
    for (std::size_t k = 0; k < active.size(); ++k) {
        if (!active[k]) continue;
        const auto root = ds.find(k);
        auto [it, fresh] = id.emplace(root, out.count);
        const Complex z = pos(k);
        if (fresh) {
            ++out.count;
            out.boxes.push_back(Box{z.real(), z.imag(), z.real(), z.imag()});
            out.representatives.push_back(z);
        } else {
            Box& b = out.boxes[it->second];
            b = Box{std::min(b.x0, z.real()), std::min(b.y0, z.imag()), std::max(b.x1, z.real()), std::max(b.y1, z.imag())};
        }
        out.labels[k] = it->second;
    }
    return out;
}

using CellKey = std::int64_t;
CellKey cell_key(long long i, long long j) { return (i << 32) ^ (j & 0xffffffffLL); }

struct Buckets {
    double cell;
    std::unordered_map<CellKey, std::vector<std::size_t>> map;
    Buckets(const std::vector<Complex>& pts, double c) : cell(c) {
        for (std::size_t k = 0; k < pts.size(); ++k) map[key(pts[k])].push_back(k);
    }
    long long ix(double v) const { return static_cast<long long>(std::floor(v / cell)); }
    CellKey key(Complex z) const { return cell_key(ix(z.real()), ix(z.imag())); }
    const std::vector<std::size_t>* at(long long i, long long j) const {
        const auto it = map.find(cell_key(i, j));
        return it == map.end() ? nullptr : &it->second;
    }
};

}  // namespace

ComponentLabeling components(const std::vector<std::uint8_t>& selected, int nx, int ny, const Box& window, double h) {
    DisjointSet ds(selected.size());
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const std::size_t k = static_cast<std::size_t>(j) * nx + i;
            if (!selected[k]) continue;
            // Forward half of the 8-neighbourhood is enough for an undirected union.
            for (const auto& [di, dj] : {std::pair{1, 0}, {-1, 1}, {0, 1}, {1, 1}}) {
                const int a = i + di, b = j + dj;
                if (a < 0 || a >= nx || b >= ny) continue;
                const std::size_t m = static_cast<std::size_t>(b) * nx + a;
                if (selected[m]) ds.unite(k, m);
            }
        }
    return relabel(ds, selected, [&](std::size_t k) {
        return Complex(window.x0 + static_cast<double>(k % nx) * h, window.y0 + static_cast<double>(k / nx) * h);
    });
}

ComponentLabeling components(const GridMask& mask) {
    return components(mask.flag, mask.nx, mask.ny, mask.window, mask.h);
}

ComponentLabeling components(const std::vector<Complex>& cloud, double radius) {
    if (!(radius > 0.0)) throw InvalidArgument("components: adjacency radius must be positive");
    DisjointSet ds(cloud.size());
    const Buckets b(cloud, radius);
    const double r2 = radius * radius * (1.0 + 1e-12);
    for (std::size_t k = 0; k < cloud.size(); ++k) {
        const long long i = b.ix(cloud[k].real()), j = b.ix(cloud[k].imag());
        for (long long di = -1; di <= 1; ++di)
            for (long long dj = -1; dj <= 1; ++dj) {
                const auto* v = b.at(i + di, j + dj);
                if (!v) continue;
                for (const auto m : *v)
                    if (m > k && std::norm(cloud[m] - cloud[k]) <= r2) ds.unite(k, m);
            }
    }
    return relabel(ds, std::vector<std::uint8_t>(cloud.size(), 1), [&](std::size_t k) { return cloud[k]; });
}

ComponentLabeling collar_components(const DomainSpec& d, Complex p, double r, double h) {
    GridOptions opt;
    opt.margin_factor = 1.0 / std::sqrt(2.0);
    opt.clip = std::make_pair(p, r);
    return components(build_grid(d, Box::around(p, r), h, opt));
}

LocalConnectivity local_connectivity_probe(const std::vector<Complex>& cloud, double res, Complex p, double eps,
                                           double delta, double radius) {
    if (!(delta < eps)) throw PreconditionError("local_connectivity_probe: need delta < eps");
    if (!(radius >= 2.0 * res)) throw PreconditionError("local_connectivity_probe: adjacency radius below 2 x resolution");
    LocalConnectivity out;
    out.res = res;
    out.radius = radius;
    std::vector<Complex> ball;
    for (const auto& z : cloud)
        if (std::abs(z - p) < eps) ball.push_back(z);
    const auto lab = components(ball, radius);
    std::vector<std::uint8_t> met(lab.count, 0);
    for (std::size_t k = 0; k < ball.size(); ++k)
        if (std::abs(ball[k] - p) < delta) met[lab.labels[k]] = 1;
    out.components = static_cast<int>(std::count(met.begin(), met.end(), 1));
    out.vacuous = out.components == 0;
    out.pass = out.components <= 1;
    return out;
}

double diameter(const std::vector<Complex>& pts) {
    if (pts.size() < 2) return 0.0;
    std::vector<Complex> p = pts;
    std::sort(p.begin(), p.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    std::vector<Complex> hull(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = p[i];
    }
    hull.resize(k > 1 ? k - 1 : k);
    double best = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        for (std::size_t j = i + 1; j < hull.size(); ++j) best = std::max(best, std::abs(hull[i] - hull[j]));
    return best;
}

std::vector<double> totally_disconnected_probe(const std::vector<Complex>& cloud, const std::vector<double>& scales) {
    for (std::size_t i = 1; i < scales.size(); ++i)
        if (!(scales[i] < scales[i - 1])) throw PreconditionError("totally_disconnected_probe: scales must decrease");
    std::vector<double> out;
    for (const double s : scales) {
        const auto lab = components(cloud, s);
        std::vector<std::vector<Complex>> groups(lab.count);
        for (std::size_t k = 0; k < cloud.size(); ++k) groups[lab.labels[k]].push_back(cloud[k]);
        double m = 0.0;
        for (const auto& g : groups) m = std::max(m, diameter(g));
        out.push_back(m);
    }
    return out;
}

EndProfile end_profile(const DomainSpec& d, const std::vector<double>& radii, const std::vector<double>& margins, double h) {
    if (is_bounded(d)) throw PreconditionError("end_profile: domain is bounded");
    if (radii.size() != margins.size()) throw InvalidArgument("end_profile: one margin per radius");
    if (!(h > 0.0)) throw InvalidArgument("end_profile: h must be positive");
    EndProfile out{radii, margins, {}, h};
    for (std::size_t r = 0; r < radii.size(); ++r) {
        const double R = radii[r], Rp = margins[r];
        if (!(Rp > R)) throw PreconditionError("end_profile: margin must exceed the radius");
        const double M = Rp + 2.0 * h;
        const int n = static_cast<int>(std::ceil(2.0 * M / h)) + 1;
        if (static_cast<double>(n) * n > 2e7) throw ResolutionError("end_profile: window overflow");
        const Box win{-M, -M, -M + (n - 1) * h, -M + (n - 1) * h};
        std::vector<std::uint8_t> state(static_cast<std::size_t>(n) * n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                state[static_cast<std::size_t>(j) * n + i] =
                    static_cast<std::uint8_t>(contains(d, {win.x0 + i * h, win.y0 + j * h}));
        // Closure: interior or band nodes, and outside nodes touching an interior node.
        std::vector<std::uint8_t> sel(state.size(), 0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const std::size_t k = static_cast<std::size_t>(j) * n + i;
                const double rad = std::hypot(win.x0 + i * h, win.y0 + j * h);
                if (!(rad > R && rad <= M)) continue;
                bool closed = state[k] != static_cast<std::uint8_t>(Membership::outside);
                for (int q = 0; q < 8 && !closed; ++q) {
                    const int a = i + kNbr[q][0], b = j + kNbr[q][1];
                    if (a < 0 || b < 0 || a >= n || b >= n) continue;
                    closed = state[static_cast<std::size_t>(b) * n + a] == static_cast<std::uint8_t>(Membership::inside);
                }
                sel[k] = closed;
            }
        const auto lab = components(sel, n, n, win, h);
        std::vector<std::uint8_t> far(lab.count, 0);
        for (std::size_t k = 0; k < sel.size(); ++k)
            if (lab.labels[k] >= 0 &&
                std::hypot(win.x0 + static_cast<double>(k % n) * h, win.y0 + static_cast<double>(k / n) * h) > Rp)
                far[lab.labels[k]] = 1;
        out.counts.push_back(static_cast<int>(std::count(far.begin(), far.end(), 1)));
    }
    return out;
}

double hausdorff_distance_euclidean(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.empty() || b.empty()) throw PreconditionError("hausdorff_distance_euclidean: empty cloud");
    // Sweep over x-sorted targets, stopping once |dx| alone exceeds the best distance.
    auto directed = [](const std::vector<Complex>& from, std::vector<Complex> to) {
        std::sort(to.begin(), to.end(), [](Complex u, Complex v) { return u.real() < v.real(); });
        double sup = 0.0;
        for (const auto& z : from) {
            const auto mid = std::lower_bound(to.begin(), to.end(), z.real(),
                                              [](Complex u, double x) { return u.real() < x; });
            double best = kInfinity;
            for (auto it = mid; it != to.end() && it->real() - z.real() < best; ++it) best = std::min(best, std::abs(*it - z));
            for (auto it = mid; it != to.begin();) {
                --it;
                if (z.real() - it->real() >= best) break;
                best = std::min(best, std::abs(*it - z));
            }
            sup = std::max(sup, best);
        }
        return sup;
    };
    return std::max(directed(a, b), directed(b, a));
}

}  // namespace vislab
