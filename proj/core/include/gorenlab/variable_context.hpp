#ifndef GORENLAB_VARIABLE_CONTEXT_HPP
#define GORENLAB_VARIABLE_CONTEXT_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gorenlab {

/*
 * A dual pair of ordered variable lists: upper-case names for the polynomial
 * ring of forms (S) and lower-case names for the ring of differential
 * operators (R) acting on it, the i-th operator being d/d(i-th form variable).
 */
enum class Side {
  form,  // the S side: forms F(X, Y, ...)
  op,    // the R side: differential operators p(x, y, ...)
};

class VariableContext;
using Ctx = std::shared_ptr<const VariableContext>;

class VariableContext {
 public:
  static Ctx make(std::vector<std::string> form_names, std::vector<std::string> op_names);
  // Operator names derived by lower-casing the form names.
  static Ctx make(std::vector<std::string> form_names);

  // (X,Y,Z,U,V) / (x,y,z,u,v), the five-variable setting used for threefolds.
  static Ctx threefold();
  // n+1 "coefficient" variables followed by m "base" variables; for small
  // counts the names are X,Y,Z and U,V,W, otherwise X0..Xn / U1..Um.
  static Ctx split(int n, int m);

  std::size_t nvars() const { return form_names_.size(); }
  const std::vector<std::string>& names(Side s) const {
    return s == Side::form ? form_names_ : op_names_;
  }
  const std::string& name(Side s, std::size_t i) const { return names(s)[i]; }
  std::optional<std::size_t> index_of(std::string_view name, Side s) const;

  bool same_as(const VariableContext& o) const {
    return form_names_ == o.form_names_ && op_names_ == o.op_names_;
  }

 private:
  VariableContext(std::vector<std::string> f, std::vector<std::string> o);
  std::vector<std::string> form_names_, op_names_;
};

}  // namespace gorenlab

#endif  // GORENLAB_VARIABLE_CONTEXT_HPP
