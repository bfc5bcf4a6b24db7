#include "iceq/acceptance.hpp"
int main() { return iceq::print_suite_results(iceq::run_paper_examples_suite()) == 0 ? 0 : 1; }
