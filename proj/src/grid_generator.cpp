#include "pafdp/grid_generator.hpp"

#include "pafdp/errors.hpp"

namespace pafdp {

namespace {

std::size_t digits(std::size_t extent) {
  std::size_t d = 1;
  for (std::size_t v = extent > 0 ? extent - 1 : 0; v >= 10; v /= 10) ++d;
  return d;
}

std::string padded(std::size_t value, std::size_t width) {
  std::string s = std::to_string(value);
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

}  // namespace

Rational draw_grid_probability(Rng& rng) {
  const auto v = uniform_below(rng, 91);
  if (v == 90) return Rational(1);
  Rational p(static_cast<long>(v / 10 + 1), 10);
  p.canonicalize();
  return p;
}

std::string grid_argument_name(const GridSpec& spec, std::size_t row, std::size_t column) {
  return "a" + padded(row, digits(spec.rows)) + "_" + padded(column, digits(spec.columns));
}

PafDocument generate_grid(const GridSpec& spec) {
  if (spec.rows == 0 || spec.columns == 0) throw InputError("grid needs k >= 1 and n >= 1");
  Rng topology = substream(spec.seed, static_cast<std::uint64_t>(GridStream::Topology));
  Rng probabilities = substream(spec.seed, static_cast<std::uint64_t>(GridStream::Probabilities));
  Rng query = substream(spec.seed, static_cast<std::uint64_t>(GridStream::QuerySet));

  std::vector<std::pair<std::string, std::string>> pairs;
  auto neighbours = [&](const std::string& x, const std::string& y) {
    switch (uniform_below(topology, 4)) {
      case 1: pairs.emplace_back(x, y); break;
      case 2: pairs.emplace_back(y, x); break;
      case 3:
        pairs.emplace_back(x, y);
        pairs.emplace_back(y, x);
        break;
      default: break;
    }
  };
  for (std::size_t r = 0; r < spec.rows; ++r) {
    for (std::size_t c = 0; c + 1 < spec.columns; ++c) {
      neighbours(grid_argument_name(spec, r, c), grid_argument_name(spec, r, c + 1));
    }
  }
  for (std::size_t r = 0; r + 1 < spec.rows; ++r) {
    for (std::size_t c = 0; c < spec.columns; ++c) {
      neighbours(grid_argument_name(spec, r, c), grid_argument_name(spec, r + 1, c));
    }
  }

  Paf::Builder builder;
  std::vector<std::string> members;
  for (std::size_t r = 0; r < spec.rows; ++r) {
    for (std::size_t c = 0; c < spec.columns; ++c) {
      builder.argument(grid_argument_name(spec, r, c), draw_grid_probability(probabilities));
    }
  }
  for (const auto& [x, y] : pairs) builder.attack(x, y, draw_grid_probability(probabilities));
  for (std::size_t r = 0; r < spec.rows; ++r) {
    for (std::size_t c = 0; c < spec.columns; ++c) {
      if (uniform_below(query, 25) == 0) members.push_back(grid_argument_name(spec, r, c));
    }
  }

  PafDocument doc;
  doc.comments = {
      "# pafdp grid instance k=" + std::to_string(spec.rows) + " n=" +
          std::to_string(spec.columns) + " seed=" + std::to_string(spec.seed),
      "# topology: each horizontal/vertical neighbour pair uniform over {none, ->, <-, <->}",
      "# probabilities: 0.1..0.9 with weight 10/91 each, 1 with weight 1/91",
      "# query set: each argument independently with probability 0.04",
  };
  doc.paf = builder.build();
  doc.query_set = doc.paf.framework().names_of(doc.paf.framework().make_set(members));
  return doc;
}

std::vector<ArgIndex> grid_elimination_order(const GridSpec& spec, const AF& af) {
  std::vector<ArgIndex> order;
  if (spec.rows <= spec.columns) {
    for (std::size_t c = 0; c < spec.columns; ++c) {
      for (std::size_t r = 0; r < spec.rows; ++r) {
        order.push_back(af.index_of(grid_argument_name(spec, r, c)));
      }
    }
  } else {
    for (std::size_t r = 0; r < spec.rows; ++r) {
      for (std::size_t c = 0; c < spec.columns; ++c) {
        order.push_back(af.index_of(grid_argument_name(spec, r, c)));
      }
    }
  }
  return order;
}

}  // namespace pafdp
