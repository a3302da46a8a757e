#include "ualg/gallery/powerset.hpp"

namespace ualg::gallery {

std::string subset_name(const Rank& events, std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    if (!first) out += ",";
    out += events.label(i);
    first = false;
  }
  return out + "}";
}

PowersetSemilattice build_powerset_semilattice(const std::vector<std::string>& events) {
  if (events.empty() || events.size() > 4) {
    throw GuardExceeded("powerset semilattice needs 1 to 4 events, got " +
                        std::to_string(events.size()));
  }
  Rank rank(events);
  const std::size_t n = std::size_t{1} << events.size();
  std::vector<std::string> names;
  for (std::uint32_t mask = 0; mask < n; ++mask) names.push_back(subset_name(rank, mask));

  std::vector<Operation> ops;
  ops.emplace_back("∪", FunctionTable::tabulate(n, Rank::indexed(2), [](std::span<const Elem> p) {
                     return p[0] | p[1];
                   }));
  ops.emplace_back("0", FunctionTable(n, Rank{}, {0}));

  Frame frame{rank, {}};
  for (std::size_t i = 0; i < events.size(); ++i) frame.U.push_back(Elem{1} << i);
  return {rank, Algebra("powerset-semilattice", Carrier(std::move(names)), std::move(ops)),
          std::move(frame)};
}

std::uint32_t union_extension(const std::vector<std::uint32_t>& matrix, std::uint32_t subset) {
  std::uint32_t out = 0;
  for (std::size_t y = 0; y < matrix.size(); ++y) {
    if (subset >> y & 1u) out |= matrix[y];
  }
  return out;
}

namespace {

// Bit strings list the first event first, so it is the most significant bit.
std::uint32_t reverse_bits(std::uint32_t mask, std::size_t width) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < width; ++i) {
    if (mask >> i & 1u) out |= 1u << (width - 1 - i);
  }
  return out;
}

}  // namespace

IncidenceTransform incidence_transform(const PowersetSemilattice& semilattice) {
  const std::size_t width = semilattice.events.size();
  const std::size_t n = semilattice.algebra.size();
  std::vector<std::string> names;
  for (std::uint32_t code = 0; code < n; ++code) {
    std::string bits;
    for (std::size_t i = width; i > 0; --i) bits += (code >> (i - 1) & 1u) ? '1' : '0';
    names.push_back(bits);
  }
  std::vector<Operation> ops;
  ops.emplace_back("or", FunctionTable::tabulate(n, Rank::indexed(2), [](std::span<const Elem> p) {
                     return p[0] | p[1];
                   }));
  ops.emplace_back("0", FunctionTable(n, Rank{}, {0}));

  IncidenceTransform out{Algebra("incidence-vectors", Carrier(std::move(names)), std::move(ops)),
                         {}, true};
  for (std::uint32_t mask = 0; mask < n; ++mask) out.j.values.push_back(reverse_bits(mask, width));

  for (std::size_t oi = 0; oi < semilattice.algebra.ops().size(); ++oi) {
    const auto& f = semilattice.algebra.op(oi);
    const auto& g = out.bits.op(oi);
    std::vector<Elem> image(f.rank().size());
    for_each_point(n, f.rank().size(), [&](std::span<const Elem> args) {
      for (std::size_t r = 0; r < args.size(); ++r) image[r] = out.j(args[r]);
      if (out.j(f(args)) != g(image)) out.isomorphism = false;
    });
  }
  return out;
}

std::vector<std::vector<int>> incidence_matrix(const Rank& events,
                                               const std::vector<std::uint32_t>& matrix) {
  std::vector<std::vector<int>> rows;
  for (std::size_t x = 0; x < events.size(); ++x) {
    std::vector<int> row(events.size());
    for (std::size_t y = 0; y < events.size(); ++y) row[y] = matrix.at(x) >> y & 1u;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ualg::gallery
