// Walks a few construction methods at small sizes and prints what each one
// delivers: the block structure, the information matrix in closed form, the
// exact eigenvalues, and the optimality criteria.

#include <cstdio>
#include <string>
#include <vector>

#include <pcbd/pcbd.hpp>

namespace {

void show(const char* title, const pcbd::method_params& mp) {
  pcbd::construction_result cr = pcbd::construct(mp);
  const pcbd::blocked_design& d = cr.design;
  pcbd::qmat m = pcbd::information_matrix(d);

  std::printf("%s\n", title);
  std::printf("  class %s, N = %d pairs, K = %d attributes, blocks:",
              cr.descriptor.class_label.c_str(), d.pairs(), d.attributes());
  for (int s : d.layout.sizes()) std::printf(" %d", s);
  std::printf("\n");
  std::printf("  orthogonally blocked: %s\n",
              pcbd::is_orthogonally_blocked(d) ? "yes" : "no");

  pcbd::ij_form ij = pcbd::as_ij_form(m);
  if (ij.ok) {
    std::printf("  M = %s I + %s J\n", ij.alpha.str().c_str(), ij.beta.str().c_str());
    std::printf("  eigenvalues:");
    for (const auto& [v, mult] : pcbd::ij_eigenvalues(ij.alpha, ij.beta, d.attributes()))
      std::printf(" %s (x%d)", v.str().c_str(), mult);
    std::printf("\n");
  } else {
    std::printf("  M rows:\n");
    for (int i = 0; i < m.rows(); ++i) {
      std::printf("   ");
      for (int j = 0; j < m.cols(); ++j) std::printf(" %8s", m(i, j).str().c_str());
      std::printf("\n");
    }
  }

  std::printf("  det M = %s, trace M = %s, smallest eigenvalue = %s\n",
              pcbd::evaluate(m, pcbd::design_criterion::determinant).str().c_str(),
              pcbd::evaluate(m, pcbd::design_criterion::total_trace).str().c_str(),
              pcbd::evaluate(m, pcbd::design_criterion::smallest_eigenvalue).str().c_str());

  pcbd::certification_report rep = pcbd::certify(cr);
  for (const auto& check : rep.checks)
    std::printf("  claim [%s]: %s\n", check.label.c_str(), check.status.c_str());
  std::printf("\n");
}

}  // namespace

int main() {
  std::printf("== a quick tour of the catalog ==\n\n");

  pcbd::method_params mp;
  mp.method = 1;
  mp.n = 18;
  mp.k = 6;
  mp.b = 9;
  show("method 1: complementary pairs, nine blocks of two", mp);

  mp = {};
  mp.method = 5;
  mp.n = 12;
  mp.k = 4;
  mp.b = 4;
  show("method 5: alternating stretch, four blocks of three", mp);

  mp = {};
  mp.method = 6;
  mp.n = 24;
  mp.k = 6;
  show("method 6: full foldover, N = 24", mp);

  mp = {};
  mp.method = 14;
  mp.k = 4;
  show("method 14: nine pairs in three blocks of three", mp);

  mp = {};
  mp.method = 16;
  mp.n = 17;
  mp.k = 4;
  mp.sizes = {3, 4, 4, 6};
  show("method 16: mixed blocks with one odd triple", mp);

  std::printf("== the full catalog ==\n\n");
  for (const auto& info : pcbd::catalog())
    std::printf("method %2d (%s): %s\n", info.method, info.optimality.c_str(),
                info.description.c_str());
  return 0;
}
