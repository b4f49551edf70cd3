#include <csignal>
#include <iostream>

#include "cycleq/cli.hpp"

namespace {

extern "C" void on_interrupt(int) { cycleq::cli::interrupt_flag().store(true); }

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_interrupt);
    std::vector<std::string> args(argv, argv + argc);
    return cycleq::cli::run(args, std::cout, std::cerr);
}
