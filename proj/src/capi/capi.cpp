#include "beauville/beauville.h"

#include <new>
#include <string>

#include "common/errors.hpp"
#include "report/commands.hpp"

struct bv_group
{
  bv::beauville::Target target;
};

struct bv_report
{
  bv::report::Verdict verdict;
  std::string text;
  std::string structured;
};

namespace {

thread_local std::string last_error;

template <class Fn>
bv_status guarded(Fn &&fn)
{
  last_error.clear();
  try {
    fn();
    return BV_OK;
  } catch (bv::ParseError const &e) {
    last_error = e.what();
    return BV_ERR_INPUT;
  } catch (std::invalid_argument const &e) {
    last_error = e.what();
    return BV_ERR_INPUT;
  } catch (std::out_of_range const &e) {
    last_error = e.what();
    return BV_ERR_INPUT;
  } catch (bv::CapExceeded const &e) {
    last_error = e.what();
    return BV_ERR_CAP;
  } catch (bv::NumericalError const &e) {
    last_error = e.what();
    return BV_ERR_NUMERIC;
  } catch (std::bad_alloc const &) {
    last_error = "out of memory";
    return BV_ERR_INTERNAL;
  } catch (std::exception const &e) {
    last_error = e.what();
    return BV_ERR_INTERNAL;
  }
}

bv_status emit(bv_report **out, bv::report::Report const &r)
{
  *out = new bv_report{r.verdict, bv::report::to_text(r), bv::report::to_structured(r)};
  return BV_OK;
}

bool null_args(void const *a, void const *b = "", void const *c = "")
{
  if (a && b && c)
    return false;
  last_error = "null argument";
  return true;
}

} // namespace

extern "C" {

const char *bv_version(void) { return "1.0.0"; }

const char *bv_last_error(void) { return last_error.c_str(); }

void bv_search_options_init(bv_search_options *opts)
{
  if (!opts)
    return;
  bv::beauville::SearchStrategy const d;
  opts->mode = BV_SEARCH_EXHAUSTIVE;
  opts->seed = d.seed;
  opts->budget = d.budget;
  opts->threads = d.threads;
}

bv_status bv_group_create(const char *spec, bv_level level, size_t cap, bv_group **out)
{
  if (null_args(spec, out))
    return BV_ERR_INPUT;
  return guarded([&] {
    auto const lvl = level == BV_LEVEL_GROUP ? bv::grp::Level::Group : bv::grp::Level::Quotient;
    auto t = bv::beauville::Target::build(bv::grp::GroupSpec::parse(spec), lvl, cap);
    *out = new bv_group{std::move(t)};
  });
}

void bv_group_destroy(bv_group *g) { delete g; }

uint64_t bv_group_order(const bv_group *g) { return g ? g->target.group->order() : 0; }

size_t bv_group_class_count(const bv_group *g) { return g ? g->target.group->classes().size() : 0; }

bv_status bv_search(const bv_group *g, const bv_search_options *opts, bv_report **out)
{
  if (null_args(g, out))
    return BV_ERR_INPUT;
  return guarded([&] {
    bv::beauville::SearchStrategy s;
    if (opts) {
      switch (opts->mode) {
      case BV_SEARCH_EXHAUSTIVE:
        s.mode = bv::beauville::SearchMode::Exhaustive;
        break;
      case BV_SEARCH_TORUS:
        s.mode = bv::beauville::SearchMode::TorusGuided;
        break;
      case BV_SEARCH_RANDOM:
        s.mode = bv::beauville::SearchMode::Random;
        break;
      default:
        throw std::invalid_argument("search: unknown mode " + std::to_string(static_cast<int>(opts->mode)));
      }
      s.seed = opts->seed;
      s.budget = opts->budget;
      s.threads = opts->threads;
    }
    emit(out, bv::report::cmd_search(g->target, s));
  });
}

bv_status bv_verify(const char *certificate, size_t cap, bv_report **out)
{
  if (null_args(certificate, out))
    return BV_ERR_INPUT;
  return guarded([&] { emit(out, bv::report::cmd_verify(certificate, cap)); });
}

bv_status bv_tori(const char *type, unsigned r, uint64_t q_lo, uint64_t q_hi, bv_report **out)
{
  if (null_args(type, out))
    return BV_ERR_INPUT;
  return guarded([&] { emit(out, bv::report::cmd_tori(type, r, q_lo, q_hi)); });
}

bv_status bv_singer(unsigned r, uint64_t q, int check_intersection, size_t cap, bv_report **out)
{
  if (null_args(out))
    return BV_ERR_INPUT;
  return guarded([&] { emit(out, bv::report::cmd_singer(r, q, check_intersection != 0, cap)); });
}

bv_status bv_charbound(const bv_group *g, uint64_t seed, bv_report **out)
{
  if (null_args(g, out))
    return BV_ERR_INPUT;
  return guarded([&] { emit(out, bv::report::cmd_charbound(g->target, seed)); });
}

bv_status bv_ree(unsigned f_lo, unsigned f_hi, bv_report **out)
{
  if (null_args(out))
    return BV_ERR_INPUT;
  return guarded([&] { emit(out, bv::report::cmd_ree(f_lo, f_hi)); });
}

bv_status bv_count(const bv_group *g, const size_t *classes, size_t n, size_t lattice_cap, uint64_t seed,
                   bv_report **out)
{
  if (null_args(g, out, n ? static_cast<void const *>(classes) : "x"))
    return BV_ERR_INPUT;
  return guarded([&] {
    std::vector<std::size_t> cls(classes, classes + n);
    emit(out, bv::report::cmd_count(g->target, cls, lattice_cap, seed));
  });
}

bv_status bv_resultant(uint64_t a, uint64_t b, bv_report **out)
{
  if (null_args(out))
    return BV_ERR_INPUT;
  return guarded([&] { emit(out, bv::report::cmd_resultant(a, b)); });
}

bv_status bv_zeta(const bv_group *g, double t, size_t lattice_cap, uint64_t seed, bv_report **out)
{
  if (null_args(g, out))
    return BV_ERR_INPUT;
  return guarded([&] { emit(out, bv::report::cmd_zeta(g->target, t, lattice_cap, seed)); });
}

bv_verdict bv_report_verdict(const bv_report *r)
{
  return r ? static_cast<bv_verdict>(static_cast<int>(r->verdict)) : BV_VERDICT_FAIL;
}

const char *bv_report_text(const bv_report *r) { return r ? r->text.c_str() : ""; }

const char *bv_report_structured(const bv_report *r) { return r ? r->structured.c_str() : ""; }

void bv_report_destroy(bv_report *r) { delete r; }

} // extern "C"
