#include <functional>
#include <map>

#include "motive/dsl.hpp"
#include "motive/errors.hpp"
#include "motive/level_arithmetic.hpp"

namespace motive::dsl {

namespace {

struct Context {
  int level;
  Mode mode;
};

Value eval(const Expr& e, const Context& ctx);

SurfCorr as_surface(const Value& v, const std::string& where) {
  if (const auto* s = std::get_if<SurfCorr>(&v)) return *s;
  throw EvalError(where + " expects a surface expression");
}

SurfTensorSum as_threefold(const Value& v, const std::string& where) {
  if (const auto* t = std::get_if<SurfTensorSum>(&v)) return *t;
  throw EvalError(where + " expects a threefold expression");
}

long int_arg(const NamedAtom& a, std::size_t i) {
  if (i >= a.args.size()) throw EvalError(a.name + " is missing argument " + std::to_string(i + 1));
  if (const long* v = std::get_if<long>(&a.args[i])) return *v;
  throw EvalError(a.name + " argument " + std::to_string(i + 1) + " must be an integer");
}

void arity(const NamedAtom& a, std::size_t n) {
  if (a.args.size() != n || (n == 0 && a.has_parens))
    throw EvalError(a.name + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
}

long index_arg(const NamedAtom& a, std::size_t i, long bound) {
  long v = int_arg(a, i);
  if (v < 0 || v >= bound)
    throw EvalError(a.name + " argument " + std::to_string(i + 1) + " out of range [0, " + std::to_string(bound) + ")");
  return v;
}

SurfCorr surface_atom(const NamedAtom& a, int N) {
  const std::string& n = a.name;
  auto plain = [&](auto make) {
    arity(a, 0);
    return make();
  };
  if (n == "Delta") return plain([&] { return surf_identity(N); });
  if (n == "V") return plain([&] { return vertical(N); });
  if (n == "mu0" || n == "p2") return plain([&] { return p_bar_two(N); });
  if (n == "p0") return plain([&] { return p_bar_zero(N); });
  if (n == "pi0" || n == "pi1" || n == "pi2")
    return plain([&] { return build_pi_bars(N).pi[static_cast<std::size_t>(n[2] - '0')]; });
  if (n == "piF")
    return plain([&] {
      SurfaceProjectors p = build_pi_bars(N);
      return p.pi[0] + p.pi[1] + p.pi[2];
    });
  if (n == "piInf") return plain([&] { return residual_projector(N); });
  if (n == "lambda") return plain([&] { return image_of(lambda_theta(N).lambda); });
  if (n == "theta") return plain([&] { return image_of(lambda_theta(N).theta); });
  if (n == "piC") {
    arity(a, 1);
    return build_pi_cusp(N, static_cast<int>(index_arg(a, 0, cusp_count(N))));
  }
  if (n == "CP") {
    arity(a, 3);
    return surf_atom(N, SurfAtom::cusp_prod(static_cast<int>(index_arg(a, 0, cusp_count(N))),
                                            mod(int_arg(a, 1), N), mod(int_arg(a, 2), N)));
  }
  if (n == "G") {
    arity(a, 3);
    long s = int_arg(a, 2);
    if (s != 1 && s != -1) throw EvalError("G sign must be 1 or -1");
    return surf_atom(N, SurfAtom::graph(SurfEnd::automorphism(GElem::make(N, int_arg(a, 0), int_arg(a, 1), static_cast<int>(s)))));
  }
  if (n == "Gc") {
    arity(a, 2);
    return surf_atom(N, SurfAtom::graph(SurfEnd::collapse_to(N, int_arg(a, 0), int_arg(a, 1))));
  }
  throw UnknownAtom(n);
}

SurfTensorSum threefold_atom(const NamedAtom& a, int N) {
  const std::string& n = a.name;
  auto plain = [&](auto make) {
    arity(a, 0);
    return make();
  };
  if (n == "Delta") return plain([&] { return t_identity_factored(N); });
  if (n == "sigma") return plain([&] { return t_sigma_factored(N); });
  if (n == "b1") return plain([&] { return build_pi_tildes(N).b1; });
  if (n == "b2") return plain([&] { return build_pi_tildes(N).b2; });
  if (n == "alt11") return plain([&] { return split_sym_alt(N).first; });
  if (n == "sym11") return plain([&] { return split_sym_alt(N).second; });
  if (n == "piInf") return plain([&] { return threefold_residual(N); });
  if (n == "piF")
    return plain([&] {
      ThreefoldProjectors p = build_pi_tildes(N);
      SurfTensorSum s(N);
      for (const auto& row : p.pi)
        for (const auto& x : row) s += x;
      return s;
    });
  if (n == "ptilde") {
    arity(a, 2);
    return build_pi_tildes(N).pi[static_cast<std::size_t>(index_arg(a, 0, 3))][static_cast<std::size_t>(index_arg(a, 1, 3))];
  }
  if (n == "pfactor") {
    // pfactor(i, j): pi~_i^(j).
    arity(a, 2);
    long i = index_arg(a, 0, 3), j = int_arg(a, 1);
    if (j != 1 && j != 2) throw EvalError("pfactor factor index must be 1 or 2");
    return build_pi_tildes(N).factor[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)];
  }
  if (n == "T") {
    arity(a, 2);
    Context sub{N, Mode::Surface};
    auto side = [&](std::size_t i) {
      if (const auto* e = std::get_if<ExprPtr>(&a.args[i])) return as_surface(eval(**e, sub), "T");
      throw EvalError("T arguments must be surface expressions");
    };
    return SurfTensorSum::pure(side(0), side(1));
  }
  throw UnknownAtom(n);
}

Value eval(const Expr& e, const Context& ctx) {
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Sum>) {
          Value acc = eval(*x.terms.front(), ctx);
          for (std::size_t i = 1; i < x.terms.size(); ++i) {
            Value v = eval(*x.terms[i], ctx);
            if (ctx.mode == Mode::Surface)
              acc = as_surface(acc, "+") + as_surface(v, "+");
            else
              acc = as_threefold(acc, "+") + as_threefold(v, "+");
          }
          return acc;
        } else if constexpr (std::is_same_v<T, Scale>) {
          Value v = eval(*x.body, ctx);
          if (ctx.mode == Mode::Surface) return x.factor * as_surface(v, "*");
          return x.factor * as_threefold(v, "*");
        } else if constexpr (std::is_same_v<T, Compose>) {
          Value l = eval(*x.left, ctx), r = eval(*x.right, ctx);
          if (ctx.mode == Mode::Surface) return compose(as_surface(l, "."), as_surface(r, "."));
          return factored_compose(as_threefold(l, "."), as_threefold(r, "."));
        } else if constexpr (std::is_same_v<T, Transpose>) {
          Value v = eval(*x.body, ctx);
          if (ctx.mode == Mode::Surface) return transpose(as_surface(v, "t"));
          return transpose(as_threefold(v, "t"));
        } else {
          if (ctx.mode == Mode::Surface) return surface_atom(x, ctx.level);
          return threefold_atom(x, ctx.level);
        }
      },
      e.node);
}

}  // namespace

Value eval_expr(const Expr& e, int level, Mode mode) {
  require_level(level);
  return eval(e, Context{level, mode});
}

std::string render_value(const Value& v) {
  if (const auto* s = std::get_if<SurfCorr>(&v)) return render(*s);
  return render(expand(std::get<SurfTensorSum>(v)));
}

bool is_zero(const Value& v) {
  if (const auto* s = std::get_if<SurfCorr>(&v)) return s->is_zero();
  return expand(std::get<SurfTensorSum>(v)).is_zero();
}

std::vector<std::string> symbol_names(Mode mode) {
  if (mode == Mode::Surface)
    return {"Delta", "V", "mu0", "p0", "p2", "pi0", "pi1", "pi2", "piF", "piInf", "lambda", "theta",
            "piC(c)", "CP(c,m,n)", "G(b1,b2,s)", "Gc(b1,b2)"};
  return {"Delta", "sigma", "b1", "b2", "alt11", "sym11", "piF", "piInf", "ptilde(i1,i2)", "pfactor(i,j)",
          "T(surface expr, surface expr)"};
}

}  // namespace motive::dsl
