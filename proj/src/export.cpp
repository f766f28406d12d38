#include "acluster/export.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

namespace acluster {

namespace {

constexpr std::array<Rgb, 10> kPalette{{
    {31, 119, 180}, {255, 127, 14}, {44, 160, 44}, {214, 39, 40}, {148, 103, 189},
    {140, 86, 75}, {227, 119, 194}, {127, 127, 127}, {188, 189, 34}, {23, 190, 207}}};

std::vector<std::string_view> split(std::string_view s, char delim) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(delim, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string svg_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
  return buf;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Rgb class_color(std::size_t c) {
  if (c < kPalette.size()) return kPalette[c];
  const std::uint32_t v = static_cast<std::uint32_t>((c - kPalette.size() + 1) * 2654435761u) &
                          0xFFFFFFu;
  return {static_cast<std::uint8_t>(v >> 16), static_cast<std::uint8_t>(v >> 8),
          static_cast<std::uint8_t>(v)};
}

void write_ppm(std::ostream& out, const SimState& state) {
  const Grid& grid = state.grid();
  const auto& idx = state.dataset().label_index();
  const int side = grid.side();
  out << "P3\n" << side << ' ' << side << "\n255\n";
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      const Coord c{x, y};
      Rgb px = kEmptyColor;
      if (grid.agent_at(c)) {
        px = kAgentColor;
      } else if (const auto item = grid.item_at(c)) {
        px = class_color(static_cast<std::size_t>(idx[*item]));
      }
      if (x) out << ' ';
      out << int(px[0]) << ' ' << int(px[1]) << ' ' << int(px[2]);
    }
    out << '\n';
  }
}

void write_svg(std::ostream& out, const SimState& state, int cell_px) {
  const Grid& grid = state.grid();
  const Dataset& data = state.dataset();
  const int side = grid.side();
  const int px = side * cell_px;
  const double h = cell_px / 2.0;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px
      << "\" viewBox=\"0 0 " << px << ' ' << px << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) {
      const auto item = grid.item_at({x, y});
      if (!item) continue;
      const auto cls = static_cast<std::size_t>(data.label_index()[*item]);
      const double cx = x * cell_px + h;
      const double cy = y * cell_px + h;
      const double r = h * 0.8;
      const std::string stroke = hex(class_color(cls));
      out << "<g><title>" << *item;
      if (data.labeled()) out << ' ' << svg_escape(data.labels()[cls]);
      out << "</title>";
      switch (cls % 4) {
        case 0:
          out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
              << "\" fill=\"none\" stroke=\"" << stroke << "\"/>";
          break;
        case 1:
          out << "<polygon points=\"" << cx << ',' << cy - r << ' ' << cx - r << ',' << cy + r
              << ' ' << cx + r << ',' << cy + r << "\" fill=\"none\" stroke=\"" << stroke
              << "\"/>";
          break;
        case 2:
          out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\""
              << stroke << "\"/>";
          break;
        default:
          out << "<path d=\"M" << cx - r << ' ' << cy << "H" << cx + r << "M" << cx << ' '
              << cy - r << "V" << cy + r << "\" stroke=\"" << stroke << "\"/>";
      }
      out << "</g>\n";
    }
  for (const Agent& a : state.agents()) {
    const double s = cell_px * 0.3;
    out << "<rect x=\"" << a.pos.x * cell_px + h - s / 2 << "\" y=\"" << a.pos.y * cell_px + h - s / 2
        << "\" width=\"" << s << "\" height=\"" << s << "\" fill=\"red\"/>\n";
  }
  out << "</svg>\n";
}

void write_entropy_csv(std::ostream& out, const std::vector<EntropyRecord>& series,
                       const Dataset& data) {
  const std::vector<std::string> labels =
      data.labeled() ? data.labels() : std::vector<std::string>{"all"};
  out << 't';
  for (const auto& l : labels) out << ",E_" << l;
  out << ",E_total\n";
  for (const auto& rec : series) {
    out << rec.t;
    for (const auto& l : labels) {
      out << ',';
      if (const auto it = rec.per_class.find(l); it != rec.per_class.end())
        out << format_real(it->second);
    }
    out << ',' << format_real(rec.total) << '\n';
  }
}

EntropySeries read_entropy_csv(std::istream& in) {
  EntropySeries s;
  std::string line;
  if (!std::getline(in, line)) throw FormatError("entropy file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto head = split(line, ',');
  if (head.size() < 2 || head.front() != "t" || head.back() != "E_total")
    throw FormatError("entropy header must start with 't' and end with 'E_total'");
  for (std::size_t i = 1; i < head.size(); ++i) s.columns.emplace_back(head[i]);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != head.size())
      throw FormatError("entropy line " + std::to_string(line_no) + " has wrong field count");
    std::int64_t t = 0;
    double total = 0.0;
    const auto r1 = std::from_chars(fields.front().data(),
                                    fields.front().data() + fields.front().size(), t);
    const auto r2 =
        std::from_chars(fields.back().data(), fields.back().data() + fields.back().size(), total);
    if (r1.ec != std::errc() || r2.ec != std::errc())
      throw ParseError("entropy line " + std::to_string(line_no) + " is not numeric");
    s.t.push_back(t);
    s.total.push_back(total);
  }
  return s;
}

std::string cluster_tag(std::size_t index) {
  std::string tag;
  std::size_t n = index + 1;
  while (n > 0) {
    --n;
    tag.insert(tag.begin(), static_cast<char>('A' + n % 26));
    n /= 26;
  }
  return tag;
}

void write_cluster_listing(std::ostream& out, const ClusterReport& report, const Dataset& data,
                           std::size_t purity_min_size) {
  const bool by_label = data.labeled() && data.labels().size() == data.size();
  std::size_t resident = 0;
  for (const auto& c : report.clusters) resident += c.size;
  out << "# clusters: " << report.n_clusters << '\n';
  out << "# resident items: " << resident << '\n';
  const double mp = mean_purity(report, purity_min_size);
  out << "# mean purity (size >= " << purity_min_size << "): "
      << (mp == mp ? format_real(mp) : std::string("n/a")) << '\n';
  for (std::size_t i = 0; i < report.clusters.size(); ++i) {
    const Cluster& c = report.clusters[i];
    const std::string tag = cluster_tag(i);
    out << "# " << tag << " size=" << c.size;
    if (data.labeled() && !by_label)
      out << " majority=" << c.majority_label << " purity=" << format_real(c.purity);
    out << '\n';
    out << '(' << tag << ')';
    for (std::size_t k = 0; k < c.members.size(); ++k) {
      out << (k ? ", " : " ");
      if (by_label)
        out << *data.item(c.members[k]).label;
      else
        out << c.members[k];
    }
    out << ".\n";
  }
}

std::string content_digest(std::istream& in) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  char buf[1 << 14];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ull;
    }
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

std::string content_digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return content_digest(in);
}

}  // namespace acluster
