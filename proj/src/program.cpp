#include "cegis/program.hpp"

namespace cegis {

bool is_frozen(const Program& program) {
  if (const auto* c = std::get_if<ChainProgram>(&program)) return c->frozen;
  if (const auto* g = std::get_if<GoldProgram>(&program)) return g->frozen;
  return false;
}

bool is_probe(const Program& program) {
  const auto* d = std::get_if<DiagProgram>(&program);
  return d != nullptr && d->shape == DiagProgram::Shape::probe;
}

std::string Family::describe(const Program& program) const {
  std::string out = language(program).descriptor();
  if (is_frozen(program)) out += " (frozen)";
  return out;
}

bool semantically_equal(const Family& family, const Program& a, const Program& b) {
  if (a == b) return true;
  return same_members(family.language(a), family.language(b));
}

}  // namespace cegis
