#include "hilbpairs/fixed_points.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hilbpairs {

namespace {

std::string cache_file_name(int charts, int m) {
    std::ostringstream os;
    os << "fixed_points_c" << charts << "_m" << m << ".txt";
    return os.str();
}

bool load_from_disk(const std::filesystem::path& file, int charts, int m,
                    std::vector<FixedPoint>& out) {
    std::ifstream in(file);
    if (!in) return false;
    std::string header;
    if (!std::getline(in, header)) return false;
    std::ostringstream expect;
    expect << "hilbpairs-fixed-points v1 charts=" << charts << " m=" << m;
    if (header != expect.str()) return false;
    std::vector<FixedPoint> result;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        FixedPoint fp;
        std::istringstream ls(line);
        std::string chunk;
        while (std::getline(ls, chunk, '|')) {
            Partition p;
            if (chunk != "-") {
                std::istringstream cs(chunk);
                std::string num;
                while (std::getline(cs, num, ',')) p.parts.push_back(std::stoi(num));
            }
            fp.parts.push_back(std::move(p));
        }
        if (static_cast<int>(fp.parts.size()) != charts || fp.size() != m) return false;
        result.push_back(std::move(fp));
    }
    out = std::move(result);
    return true;
}

void save_to_disk(const std::filesystem::path& file, int charts, int m,
                  const std::vector<FixedPoint>& pts) {
    std::ofstream outf(file);
    if (!outf) return; // cache is best effort
    outf << "hilbpairs-fixed-points v1 charts=" << charts << " m=" << m << "\n";
    for (const auto& fp : pts) {
        for (std::size_t c = 0; c < fp.parts.size(); ++c) {
            if (c) outf << '|';
            const auto& p = fp.parts[c];
            if (p.empty()) {
                outf << '-';
            } else {
                for (std::size_t i = 0; i < p.parts.size(); ++i) {
                    if (i) outf << ',';
                    outf << p.parts[i];
                }
            }
        }
        outf << "\n";
    }
}

std::vector<FixedPoint> enumerate_uncached(int charts, int m) {
    std::vector<std::vector<Partition>> per_size(static_cast<std::size_t>(m) + 1);
    for (int s = 0; s <= m; ++s) per_size[static_cast<std::size_t>(s)] = partitions_of(s);

    std::vector<FixedPoint> out;
    FixedPoint current;
    current.parts.resize(static_cast<std::size_t>(charts));

    auto fill = [&](auto&& self, int chart, int remaining) -> void {
        if (chart == charts - 1) {
            for (const auto& p : per_size[static_cast<std::size_t>(remaining)]) {
                current.parts[static_cast<std::size_t>(chart)] = p;
                out.push_back(current);
            }
            return;
        }
        for (int s = 0; s <= remaining; ++s) {
            for (const auto& p : per_size[static_cast<std::size_t>(s)]) {
                current.parts[static_cast<std::size_t>(chart)] = p;
                self(self, chart + 1, remaining - s);
            }
        }
    };
    if (charts == 0) {
        if (m == 0) out.push_back(FixedPoint{});
        return out;
    }
    fill(fill, 0, m);
    return out;
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    // Parts are chosen front to back, each bounded by its predecessor and
    // swept in ascending order, which emits the weakly decreasing sequences
    // in ascending lexicographic order.
    std::vector<int> stack;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            Partition p;
            p.parts = stack;
            out.push_back(std::move(p));
            return;
        }
        for (int part = 1; part <= std::min(remaining, max_part); ++part) {
            stack.push_back(part);
            self(self, remaining - part, part);
            stack.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<FixedPoint> enumerate_fixed_points(const SurfaceModel& S, int m) {
    if (m < 0) throw std::invalid_argument("enumerate_fixed_points: negative m");
    const int charts = static_cast<int>(S.charts.size());

    static std::mutex cache_mutex;
    static std::map<std::pair<int, int>, std::vector<FixedPoint>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({charts, m});
        if (it != cache.end()) return it->second;
    }

    std::vector<FixedPoint> pts;
    bool from_disk = false;
    const char* dir = std::getenv("HILBPAIRS_CACHE_DIR");
    std::filesystem::path file;
    if (dir && *dir) {
        file = std::filesystem::path(dir) / cache_file_name(charts, m);
        from_disk = load_from_disk(file, charts, m, pts);
    }
    if (!from_disk) {
        pts = enumerate_uncached(charts, m);
        if (dir && *dir) {
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            if (!ec) save_to_disk(file, charts, m, pts);
        }
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = cache.emplace(std::make_pair(charts, m), std::move(pts));
    return it->second;
}

} // namespace hilbpairs
