#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "digitsum/numeric.hpp"

int main(int argc, char** argv) {
    digitsum::install_real_precision();
    return doctest::Context(argc, argv).run();
}
