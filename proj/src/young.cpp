#include "schubert/young.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "schubert/error.hpp"
#include "schubert/integer.hpp"

namespace schubert {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("cannot parse integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return value;
}

// The k-row padded partition.
std::vector<int> padded(const Partition& p, int rows) {
  std::vector<int> out(static_cast<std::size_t>(std::max(rows, p.length())), 0);
  for (int i = 0; i < p.length(); ++i) out[static_cast<std::size_t>(i)] = p[i];
  return out;
}

void require_fits(const Partition& p, Frame f) {
  if (!fits_in_frame(p, f)) {
    throw FrameError("partition (" + p.to_string() + ") does not fit the " + f.to_string() + " frame");
  }
}

bool is_doubled(const Partition& p) {
  if (p.length() % 2 != 0) return false;
  for (int i = 0; i < p.length(); i += 2) {
    if (p[i] != p[i + 1] || p[i] % 2 != 0) return false;
  }
  return true;
}

void enumerate(Frame f, int row, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (row == f.k) {
    out.emplace_back(current);
    return;
  }
  for (int v = 0; v <= max_part; ++v) {
    current[static_cast<std::size_t>(row)] = v;
    enumerate(f, row + 1, v, current, out);
  }
  current[static_cast<std::size_t>(row)] = 0;
}

}  // namespace

Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ParseError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ParseError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) return Partition();
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    parts.push_back(parse_int(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::area() const {
  int a = 0;
  for (int x : parts_) a += x;
  return a;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(parts_.front()), 0);
  for (int x : parts_) {
    for (int j = 0; j < x; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Frame::Frame(int rows, int cols) : k(rows), w(cols) {
  if (rows < 0 || cols < 0) throw FrameError("frame dimensions must be nonnegative");
}

Frame Frame::parse(std::string_view text) {
  std::string_view s = trim(text);
  int k = 0;
  int w = 0;
  if (s.size() > 4 && (s.substr(0, 3) == "Gr(" || s.substr(0, 3) == "gr(") && s.back() == ')') {
    std::string_view inner = s.substr(3, s.size() - 4);
    std::size_t comma = inner.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected Gr(k,n), got '" + std::string(text) + "'");
    k = parse_int(inner.substr(0, comma), text);
    w = parse_int(inner.substr(comma + 1), text) - k;
  } else {
    std::size_t x = s.find_first_of("xX");
    if (x == std::string_view::npos) throw ParseError("expected KxW or Gr(k,n), got '" + std::string(text) + "'");
    k = parse_int(s.substr(0, x), text);
    w = parse_int(s.substr(x + 1), text);
  }
  if (k < 1 || w < 1) throw FrameError("frame '" + std::string(text) + "' needs k >= 1 and n - k >= 1");
  return Frame(k, w);
}

std::string Frame::to_string() const { return std::to_string(k) + "x" + std::to_string(w); }

std::string to_string(Twist t) { return t == Twist::O ? "o" : "det"; }

Twist parse_twist(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "o" || s == "O" || s == "0") return Twist::O;
  if (s == "det" || s == "1") return Twist::Det;
  throw ParseError("twist must be 'o' or 'det', got '" + std::string(text) + "'");
}

std::string to_string(Extra e) {
  switch (e) {
    case Extra::None: return "none";
    case Extra::Ek: return "ek";
    case Extra::Eperp: return "eperp";
    case Extra::R: return "r";
  }
  return "?";
}

bool fits_in_frame(const Partition& p, Frame f) { return p.length() <= f.k && p[0] <= f.w; }

BoundaryProfile boundary_profile(const Partition& p, Frame f) {
  require_fits(p, f);
  BoundaryProfile bp;
  const std::vector<int> rows = padded(p, f.k);
  for (int i = 0; i < f.k; ++i) {
    if (i == f.k - 1 || rows[static_cast<std::size_t>(i)] != rows[static_cast<std::size_t>(i + 1)]) {
      bp.d.push_back(i + 1);
      bp.e.push_back(f.w - rows[static_cast<std::size_t>(i)]);
    }
  }
  return bp;
}

bool is_even(const Partition& p, Frame f) {
  const BoundaryProfile bp = boundary_profile(p, f);
  const auto& d = bp.d;
  const auto& e = bp.e;
  const int segs = bp.segments();
  // Interior vertical segments between consecutive groups.
  for (int i = 0; i + 2 < segs; ++i) {
    if ((d[i + 1] - d[i]) % 2 != 0) return false;
  }
  // Horizontal segments.
  for (int i = 0; i + 1 < segs; ++i) {
    if ((e[i + 1] - e[i]) % 2 != 0) return false;
  }
  if (0 < e.front() && e.front() < f.w && d.front() % 2 != 0) return false;
  const int last = d.back() - (segs >= 2 ? d[segs - 2] : 0);
  if (0 < e.back() && e.back() < f.w && last % 2 != 0) return false;
  return true;
}

bool is_completely_even(const Partition& p, Frame f) {
  require_fits(p, f);
  return is_doubled(p);
}

Partition doubled(const Partition& p) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(2 * p.length()));
  for (int x : p.parts()) {
    out.push_back(2 * x);
    out.push_back(2 * x);
  }
  return Partition(std::move(out));
}

Partition halve_completely_even(const Partition& p) {
  if (!is_doubled(p)) throw NotDoubledError("(" + p.to_string() + ") is not a doubled partition");
  std::vector<int> out;
  for (int i = 0; i < p.length(); i += 2) out.push_back(p[i] / 2);
  return Partition(std::move(out));
}

Frame core_frame(Frame f, Extra extra) {
  switch (extra) {
    case Extra::None: return Frame(f.k / 2, f.w / 2);
    case Extra::Ek: return Frame(f.k / 2, std::max(f.w - 1, 0) / 2);
    case Extra::Eperp: return Frame(std::max(f.k - 1, 0) / 2, f.w / 2);
    case Extra::R: return Frame(std::max(f.k - 1, 0) / 2, std::max(f.w - 1, 0) / 2);
  }
  return Frame();
}

bool extra_allowed(Frame f, Extra extra) {
  switch (extra) {
    case Extra::None: return true;
    case Extra::Ek: return f.k >= 2 && f.k % 2 == 0 && f.w >= 1;
    case Extra::Eperp: return f.w >= 2 && f.w % 2 == 0 && f.k >= 1;
    case Extra::R: return f.k % 2 == 1 && f.w % 2 == 1;
  }
  return false;
}

EvenDecomposition decompose_even(const Partition& p, Frame f) {
  require_fits(p, f);
  if (!is_even(p, f)) throw NotEvenError("(" + p.to_string() + ") is not even in the " + f.to_string() + " frame");
  const std::vector<int> rows = padded(p, f.k);
  std::vector<EvenDecomposition> found;

  if (is_doubled(p)) found.push_back({halve_completely_even(p), Extra::None});

  if (f.k % 2 == 0 && rows.back() >= 1) {
    std::vector<int> rest(rows);
    for (int& x : rest) --x;
    Partition q(std::move(rest));
    if (is_doubled(q)) found.push_back({halve_completely_even(q), Extra::Ek});
  }

  if (f.w % 2 == 0 && rows.front() == f.w) {
    Partition q(std::vector<int>(rows.begin() + 1, rows.end()));
    if (is_doubled(q)) found.push_back({halve_completely_even(q), Extra::Eperp});
  }

  if (f.k % 2 == 1 && f.w % 2 == 1 && rows.front() == f.w && rows.back() >= 1) {
    std::vector<int> rest(rows.begin() + 1, rows.end());
    for (int& x : rest) --x;
    Partition q(std::move(rest));
    if (is_doubled(q)) found.push_back({halve_completely_even(q), Extra::R});
  }

  if (found.size() != 1) {
    throw DecompositionError("even diagram (" + p.to_string() + ") in " + f.to_string() + " decomposes in " +
                             std::to_string(found.size()) + " ways");
  }
  return found.front();
}

Partition combine_even(const EvenDecomposition& dec, Frame f) {
  if (!extra_allowed(f, dec.extra)) {
    throw FrameError("extra factor " + to_string(dec.extra) + " does not exist in the " + f.to_string() + " frame");
  }
  const Frame cf = core_frame(f, dec.extra);
  if (!fits_in_frame(dec.core, cf)) {
    throw FrameError("core (" + dec.core.to_string() + ") does not fit the " + cf.to_string() + " frame for extra " +
                     to_string(dec.extra));
  }
  const Partition dc = doubled(dec.core);
  std::vector<int> rows;
  switch (dec.extra) {
    case Extra::None:
      return dc;
    case Extra::Ek:
      rows = padded(dc, f.k);
      for (int& x : rows) ++x;
      break;
    case Extra::Eperp:
      rows.push_back(f.w);
      for (int x : dc.parts()) rows.push_back(x);
      break;
    case Extra::R: {
      rows.push_back(f.w);
      for (int x : padded(dc, f.k - 1)) rows.push_back(x + 1);
      break;
    }
  }
  Partition out(std::move(rows));
  require_fits(out, f);
  return out;
}

Twist twist_of(Extra extra) { return (extra == Extra::Ek || extra == Extra::Eperp) ? Twist::Det : Twist::O; }

Twist twist(const Partition& p, Frame f) { return twist_of(decompose_even(p, f).extra); }

Partition complement(const Partition& p, Frame f) {
  require_fits(p, f);
  std::vector<int> out(static_cast<std::size_t>(f.k));
  for (int i = 0; i < f.k; ++i) out[static_cast<std::size_t>(i)] = f.w - p[f.k - 1 - i];
  return Partition(std::move(out));
}

Color checkerboard_color(int row, int col) { return (row + col) % 2 == 0 ? Color::Black : Color::White; }

std::vector<Partition> frame_partitions(Frame f, int area) {
  std::vector<Partition> all;
  std::vector<int> current(static_cast<std::size_t>(f.k), 0);
  enumerate(f, 0, f.w, current, all);
  if (area >= 0) {
    std::erase_if(all, [area](const Partition& p) { return p.area() != area; });
  }
  std::stable_sort(all.begin(), all.end(), [](const Partition& a, const Partition& b) {
    if (a.area() != b.area()) return a.area() < b.area();
    return b < a;
  });
  return all;
}

std::vector<Partition> even_diagrams(Frame f) {
  std::vector<Partition> out;
  for (auto& p : frame_partitions(f)) {
    if (is_even(p, f)) out.push_back(std::move(p));
  }
  return out;
}

std::string render_diagram(const Partition& p, bool checkerboard) {
  if (p.empty()) return ".\n";
  std::ostringstream os;
  for (int r = 0; r < p.length(); ++r) {
    for (int c = 0; c < p[r]; ++c) {
      if (checkerboard) {
        os << (checkerboard_color(r + 1, c + 1) == Color::Black ? 'B' : 'W');
      } else {
        os << '#';
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace schubert
