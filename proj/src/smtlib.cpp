// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sccpe/smtlib.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <mutex>
#include <sstream>

#include "sccpe/error.hpp"

namespace sccpe {

namespace {

std::string symbol(const std::string& name) { return "|" + name + "|"; }

std::string literal(const Integer& v) {
  if (v < 0) {
    Integer m = -v;
    return "(- " + m.str() + ")";
  }
  return v.str();
}

void emit(const TermNode& n, std::ostringstream& out) {
  auto nary = [&](const char* head) {
    out << '(' << head;
    for (const auto& a : n.args) {
      out << ' ';
      emit(*a, out);
    }
    out << ')';
  };
  switch (n.op) {
    case Op::True: out << "true"; return;
    case Op::False: out << "false"; return;
    case Op::BoolVar:
    case Op::IntVar: out << symbol(n.name); return;
    case Op::IntLit: out << literal(n.value); return;
    case Op::Not: nary("not"); return;
    case Op::And: nary("and"); return;
    case Op::Or: nary("or"); return;
    case Op::Xor: nary("xor"); return;
    case Op::Implies: nary("=>"); return;
    case Op::BoolEq:
    case Op::IntEq: nary("="); return;
    case Op::BoolNe:
    case Op::IntNe: nary("distinct"); return;
    case Op::Lt: nary("<"); return;
    case Op::Le: nary("<="); return;
    case Op::Gt: nary(">"); return;
    case Op::Ge: nary(">="); return;
    case Op::BoolIte:
    case Op::IntIte: nary("ite"); return;
    case Op::Neg: nary("-"); return;
    case Op::Add: nary("+"); return;
    case Op::Sub: nary("-"); return;
    case Op::Mul: nary("*"); return;
    case Op::Div: nary("div"); return;
    case Op::Mod: nary("mod"); return;
  }
}

void ignore_sigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

void close_fd(int& fd) {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

}  // namespace

std::string to_smtlib2_term(const Formula& c) {
  std::ostringstream out;
  emit(*c.node(), out);
  return out.str();
}

std::string to_smtlib2_script(const Formula& c) {
  std::ostringstream out;
  out << "(set-logic QF_LIA)\n";
  for (const VarName& v : free_vars(c)) {
    out << "(declare-const " << symbol(v.name) << ' ' << (v.sort == Sort::Int ? "Int" : "Bool") << ")\n";
  }
  out << "(assert " << to_smtlib2_term(c) << ")\n";
  out << "(check-sat)\n";
  return out.str();
}

SatResult parse_smtlib2_verdict(const std::string& output) {
  std::istringstream in(output);
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string word = line.substr(b, e - b + 1);
    if (word == "sat") return SatResult::sat();
    if (word == "unsat") return SatResult::unsat();
    if (word == "unknown") return SatResult::unknown("solver answered unknown");
    throw SolverError("unexpected solver response: " + word);
  }
  throw SolverError("solver produced no verdict");
}

SatResult run_smtlib2(const std::string& command, const std::string& script, int timeout_ms) {
  if (command.empty()) throw SolverError("no external solver command configured");
  ignore_sigpipe();

  int to_child[2];
  int from_child[2];
  if (::pipe2(to_child, O_CLOEXEC) != 0) throw SolverError(std::string("pipe: ") + std::strerror(errno));
  if (::pipe2(from_child, O_CLOEXEC) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    throw SolverError(std::string("pipe: ") + std::strerror(errno));
  }

  const std::string shell_command = "exec " + command;
  const pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) ::close(fd);
    throw SolverError(std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    const int devnull = ::open("/dev/null", O_WRONLY);
    if (devnull >= 0) ::dup2(devnull, STDERR_FILENO);
    ::execl("/bin/sh", "sh", "-c", shell_command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }

  int write_fd = to_child[1];
  int read_fd = from_child[0];
  ::close(to_child[0]);
  ::close(from_child[1]);
  ::fcntl(write_fd, F_SETFL, O_NONBLOCK);

  const auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
  std::size_t written = 0;
  std::string output;
  bool timed_out = false;
  bool io_error = false;
  char buffer[4096];

  while (read_fd >= 0) {
    const auto now = std::chrono::steady_clock::now();
    if (now >= deadline) {
      timed_out = true;
      break;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count();
    pollfd fds[2];
    nfds_t count = 0;
    fds[count++] = {read_fd, POLLIN, 0};
    if (write_fd >= 0) fds[count++] = {write_fd, POLLOUT, 0};
    const int ready = ::poll(fds, count, static_cast<int>(left) + 1);
    if (ready < 0) {
      if (errno == EINTR) continue;
      io_error = true;
      break;
    }
    if (count == 2 && fds[1].revents) {
      if (fds[1].revents & POLLOUT) {
        const ssize_t n = ::write(write_fd, script.data() + written, script.size() - written);
        if (n > 0) written += static_cast<std::size_t>(n);
        if (n < 0 && errno != EAGAIN && errno != EINTR) close_fd(write_fd);
      } else {
        close_fd(write_fd);
      }
      if (write_fd >= 0 && written == script.size()) close_fd(write_fd);
    }
    if (fds[0].revents) {
      const ssize_t n = ::read(read_fd, buffer, sizeof buffer);
      if (n > 0) {
        output.append(buffer, static_cast<std::size_t>(n));
      } else if (n == 0 || (errno != EAGAIN && errno != EINTR)) {
        close_fd(read_fd);
      }
    }
  }
  close_fd(write_fd);
  close_fd(read_fd);

  if (timed_out || io_error) ::kill(-pid, SIGKILL);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (timed_out) return SatResult::unknown("timeout after " + std::to_string(timeout_ms) + " ms");
  if (io_error) throw SolverError("I/O failure while talking to the solver");
  if (output.find_first_not_of(" \t\r\n") == std::string::npos && WIFEXITED(status) && WEXITSTATUS(status) == 127) {
    throw SolverError("could not run solver command: " + command);
  }
  return parse_smtlib2_verdict(output);
}

}  // namespace sccpe
