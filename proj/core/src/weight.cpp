#include "ppart/weight.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ppart {

Weight::Weight(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) {
    throw InvalidInput("weight rank " + std::to_string(rank) + " outside 0.." +
                       std::to_string(kMaxRank));
  }
}

Weight::Weight(std::initializer_list<int> coords) : Weight(static_cast<int>(coords.size())) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight Weight::from_span(std::span<const int> coords) {
  Weight w(static_cast<int>(coords.size()));
  std::copy(coords.begin(), coords.end(), w.c_.begin());
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x == 0; });
}

bool Weight::dominant() const {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x >= 0; });
}

bool Weight::strongly_dominant() const {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x >= 1; });
}

Weight Weight::truncated(int rank) const {
  Weight w(rank);
  for (int k = 0; k < rank && k < rank_; ++k) w.c_[k] = c_[k];
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  for (int k = 0; k < rank_; ++k) c_[k] += o.c_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int k = 0; k < rank_; ++k) c_[k] -= o.c_[k];
  return *this;
}

Weight& Weight::operator*=(int s) {
  for (int k = 0; k < rank_; ++k) c_[k] *= s;
  return *this;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (int k = 0; k < w.rank(); ++k) {
    if (k) os << ',';
    os << w[k];
  }
  os << ')';
  return os.str();
}

Weight parse_weight(std::string_view text) {
  std::vector<int> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw InvalidInput("malformed weight coordinate '" + std::string(item) + "' in '" +
                         std::string(text) + "'");
    }
    coords.push_back(value);
    pos = end + 1;
  }
  if (coords.size() > static_cast<std::size_t>(kMaxRank)) {
    throw InvalidInput("weight has more than " + std::to_string(kMaxRank) + " coordinates");
  }
  return Weight::from_span(coords);
}

}  // namespace ppart
