#include "gorenlab/variable_context.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace gorenlab {

VariableContext::VariableContext(std::vector<std::string> f, std::vector<std::string> o)
    : form_names_(std::move(f)), op_names_(std::move(o)) {
  if (form_names_.size() != op_names_.size()) {
    throw std::invalid_argument("VariableContext: side lengths differ");
  }
  if (form_names_.empty()) throw std::invalid_argument("VariableContext: no variables");
  std::set<std::string> seen;
  for (const auto& list : {form_names_, op_names_}) {
    for (const auto& n : list) {
      if (n.empty()) throw std::invalid_argument("VariableContext: empty variable name");
      if (!seen.insert(n).second) {
        throw std::invalid_argument("VariableContext: duplicate variable name '" + n + "'");
      }
    }
  }
}

Ctx VariableContext::make(std::vector<std::string> form_names, std::vector<std::string> op_names) {
  return Ctx(new VariableContext(std::move(form_names), std::move(op_names)));
}

Ctx VariableContext::make(std::vector<std::string> form_names) {
  std::vector<std::string> ops;
  ops.reserve(form_names.size());
  for (const auto& n : form_names) {
    std::string low = n;
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    ops.push_back(low);
  }
  return make(std::move(form_names), std::move(ops));
}

Ctx VariableContext::threefold() {
  static const Ctx ctx = make({"X", "Y", "Z", "U", "V"});
  return ctx;
}

Ctx VariableContext::split(int n, int m) {
  if (n < 0 || m < 1) throw std::invalid_argument("VariableContext::split: bad sizes");
  std::vector<std::string> names;
  if (n + 1 <= 3) {
    const char* xs[] = {"X", "Y", "Z"};
    for (int i = 0; i <= n; ++i) names.push_back(xs[i]);
  } else {
    for (int i = 0; i <= n; ++i) names.push_back("X" + std::to_string(i));
  }
  if (m <= 3) {
    const char* us[] = {"U", "V", "W"};
    for (int i = 0; i < m; ++i) names.push_back(us[i]);
  } else {
    for (int i = 1; i <= m; ++i) names.push_back("U" + std::to_string(i));
  }
  return make(std::move(names));
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name, Side s) const {
  const auto& list = names(s);
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == name) return i;
  }
  return std::nullopt;
}

}  // namespace gorenlab
