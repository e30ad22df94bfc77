#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "varlam/stack.hpp"

int main(int argc, char** argv) {
  int rc = 0;
  varlam::with_large_stack([&] {
    doctest::Context ctx(argc, argv);
    rc = ctx.run();
  });
  return rc;
}
