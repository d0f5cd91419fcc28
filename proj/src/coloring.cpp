#include "schurlab/coloring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "schurlab/error.hpp"

namespace schurlab {

char color_letter(Color c) {
  switch (c) {
    case Color::Red: return 'R';
    case Color::Blue: return 'B';
    case Color::Green: return 'G';
  }
  return '?';
}

Color parse_color_letter(char letter) {
  switch (std::toupper(static_cast<unsigned char>(letter))) {
    case 'R': return Color::Red;
    case 'B': return Color::Blue;
    case 'G': return Color::Green;
    default: throw Error(std::string("unknown color letter '") + letter + "'");
  }
}

namespace {

int infer_r(std::span<const Color> cells, int r) {
  if (r != 0) return r;
  return std::any_of(cells.begin(), cells.end(), [](Color c) { return c == Color::Green; }) ? 3 : 2;
}

}  // namespace

Coloring::Coloring(std::vector<Color> cells, int r) : cells_(std::move(cells)), r_(r) {
  if (r_ < 2 || r_ > kMaxColors) throw Error("number of colors must be 2 or 3");
  if (cells_.empty()) throw Error("a coloring needs at least one cell");
  for (Color c : cells_) {
    if (index_of(c) >= r_) throw Error("cell color out of range for r=" + std::to_string(r_));
  }
}

Coloring Coloring::uniform(int n, Color c, int r) {
  if (n < 1) throw Error("n must be positive");
  return Coloring(std::vector<Color>(static_cast<std::size_t>(n), c), r);
}

std::array<int, kMaxColors> Coloring::counts() const {
  std::array<int, kMaxColors> out{};
  for (Color c : cells_) ++out[static_cast<std::size_t>(index_of(c))];
  return out;
}

Coloring Coloring::flip(int position, Color new_color) const {
  Coloring copy = *this;
  copy.set(position, new_color);
  return copy;
}

void Coloring::set(int position, Color new_color) {
  if (position < 1 || position > n()) {
    throw Error("position " + std::to_string(position) + " outside [1," + std::to_string(n()) + "]");
  }
  if (index_of(new_color) >= r_) throw Error("color out of range");
  cells_[static_cast<std::size_t>(position - 1)] = new_color;
}

Coloring Coloring::swap_colors(Color a, Color b) const {
  std::vector<Color> out(cells_);
  for (Color& c : out) {
    if (c == a) c = b;
    else if (c == b) c = a;
  }
  return Coloring(std::move(out), r_);
}

std::vector<int> block_lengths(int n, const BlockSpec& spec) {
  if (n < 1) throw Error("n must be positive");
  if (spec.blocks.empty()) throw Error("empty block list");
  Weight total;
  for (const Block& b : spec.blocks) {
    if (b.weight.sign() < 0) throw Error("negative block weight");
    total = total + b.weight;
  }
  if (total.sign() == 0) throw Error("block weights sum to zero");

  std::vector<int> lengths;
  lengths.reserve(spec.blocks.size());
  Weight prefix;
  std::int64_t prev = 0;
  for (const Block& b : spec.blocks) {
    prefix = prefix + b.weight;
    const std::int64_t boundary = (Weight(n) * prefix / total).floor();
    lengths.push_back(static_cast<int>(boundary - prev));
    prev = boundary;
  }
  return lengths;
}

Coloring from_blocks(int n, const BlockSpec& spec, int r) {
  const std::vector<int> lengths = block_lengths(n, spec);
  std::vector<Color> cells;
  cells.reserve(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    cells.insert(cells.end(), static_cast<std::size_t>(lengths[k]), spec.blocks[k].color);
  }
  if (r == 0) {
    r = 2;
    for (const Block& b : spec.blocks) r = std::max(r, index_of(b.color) + 1);
  }
  return Coloring(std::move(cells), r);
}

Coloring parse_runlength(std::string_view text, int r) {
  std::vector<Color> cells;
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const Color c = parse_color_letter(text[i]);
    ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw Error("run-length token without count");
    long long count = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, count);
    if (ec != std::errc() || ptr != text.data() + j) throw Error("bad run-length count");
    if (count == 0) throw Error("run-length count must be positive");
    if (count > (1LL << 28)) throw Error("run-length count too large");
    if (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
      throw Error("run-length tokens must be whitespace separated");
    }
    cells.insert(cells.end(), static_cast<std::size_t>(count), c);
    any = true;
    i = j;
  }
  if (!any) throw Error("empty run-length coloring");
  const int rr = infer_r(cells, r);
  return Coloring(std::move(cells), rr);
}

std::string format_runlength(const Coloring& coloring) {
  std::ostringstream out;
  const auto cells = coloring.cells();
  std::size_t i = 0;
  while (i < cells.size()) {
    std::size_t j = i;
    while (j < cells.size() && cells[j] == cells[i]) ++j;
    if (i != 0) out << ' ';
    out << color_letter(cells[i]) << (j - i);
    i = j;
  }
  return out.str();
}

nlohmann::ordered_json to_json(const Coloring& coloring) {
  nlohmann::ordered_json j;
  j["n"] = coloring.n();
  j["r"] = coloring.r();
  j["runs"] = format_runlength(coloring);
  return j;
}

Coloring coloring_from_json(const nlohmann::json& j) {
  const int r = j.value("r", 0);
  Coloring c = parse_runlength(j.at("runs").get<std::string>(), r);
  if (j.contains("n") && j.at("n").get<int>() != c.n()) throw Error("coloring JSON: n does not match runs");
  return c;
}

MuStats mu_stats(const Coloring& coloring, int a) {
  if (a < 1) throw Error("split parameter a must be >= 1");
  MuStats s;
  s.n = coloring.n();
  s.split = a;
  s.lo_len = s.n / a;
  for (int i = 1; i <= s.n; ++i) {
    const auto c = static_cast<std::size_t>(index_of(coloring.at(i)));
    ++s.mu[c];
    if (i <= s.lo_len) ++s.mu_lo[c];
    else ++s.mu_hi[c];
  }
  return s;
}

PairStats pair_stats(const Coloring& coloring, int length) {
  if (length < 1 || length > coloring.n()) {
    throw Error("pair interval length must lie in [1, n]");
  }
  PairStats p;
  p.length = length;
  for (int s = 1; s <= length / 2; ++s) {
    const auto lo = static_cast<std::size_t>(index_of(coloring.at(s)));
    const auto hi = static_cast<std::size_t>(index_of(coloring.at(length + 1 - s)));
    ++p.mu_cc[lo][hi];
    if (lo != hi) ++p.gamma_count;
  }
  return p;
}

}  // namespace schurlab
