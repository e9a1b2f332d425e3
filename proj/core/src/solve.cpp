#include "cpck/solve.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>

#include "cpck/errors.hpp"

namespace cpck {

const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unsat: return "unsat";
    case SolveStatus::Sat: return "sat";
    case SolveStatus::Unknown: return "unknown";
    case SolveStatus::Timeout: return "timeout";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct TempFile {
  std::string path;
  ~TempFile() {
    if (!path.empty()) ::unlink(path.c_str());
  }
};

void write_all(int fd, const std::string& data) {
  std::size_t off = 0;
  while (off < data.size()) {
    ssize_t n = ::write(fd, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw SolverSpawnError("cannot write problem file: " + std::string(strerror(errno)));
    }
    off += static_cast<std::size_t>(n);
  }
}

std::string substitute_command(const std::string& command, const std::string& path) {
  std::string out;
  std::size_t pos = 0, hit;
  bool replaced = false;
  while ((hit = command.find("{file}", pos)) != std::string::npos) {
    out.append(command, pos, hit - pos);
    out += path;
    pos = hit + 6;
    replaced = true;
  }
  out.append(command, pos, std::string::npos);
  if (!replaced) {
    out += ' ';
    out += path;
  }
  return out;
}

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

}  // namespace

SolveResult solve_external(const Script& problem, const std::string& command, int timeout_sec) {
  auto t0 = Clock::now();

  TempFile tmp;
  {
    char tpl[] = "/tmp/cpck-problem-XXXXXX.smt2";
    int fd = ::mkstemps(tpl, 5);
    if (fd < 0) throw SolverSpawnError("cannot create temp file");
    tmp.path = tpl;
    write_all(fd, print_script(problem));
    ::close(fd);
  }

  std::string shell_cmd = substitute_command(command, tmp.path);

  int pipefd[2];
  if (::pipe(pipefd) != 0) throw SolverSpawnError("cannot create pipe");

  pid_t pid = ::fork();
  if (pid < 0) {
    ::close(pipefd[0]);
    ::close(pipefd[1]);
    throw SolverSpawnError("fork failed");
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(pipefd[1], STDOUT_FILENO);
    ::close(pipefd[0]);
    ::close(pipefd[1]);
    int devnull = ::open("/dev/null", O_WRONLY);
    if (devnull >= 0) ::dup2(devnull, STDERR_FILENO);
    ::execl("/bin/sh", "sh", "-c", shell_cmd.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  ::setpgid(pid, pid);  // also from the parent, to lose the race
  ::close(pipefd[1]);

  bool has_deadline = timeout_sec >= 0;
  auto deadline = t0 + std::chrono::seconds(has_deadline ? timeout_sec : 0);

  std::string output;
  bool timed_out = false;
  char buf[4096];
  for (;;) {
    int wait_ms = -1;
    if (has_deadline) {
      auto left =
          std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()).count();
      if (left <= 0) {
        timed_out = true;
        break;
      }
      wait_ms = static_cast<int>(left);
    }
    struct pollfd pfd{pipefd[0], POLLIN, 0};
    int rc = ::poll(&pfd, 1, wait_ms);
    if (rc == 0) {
      timed_out = true;
      break;
    }
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }
    ssize_t n = ::read(pipefd[0], buf, sizeof buf);
    if (n < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (n == 0) break;  // solver closed stdout
    output.append(buf, static_cast<std::size_t>(n));
  }
  ::close(pipefd[0]);

  int wstatus = 0;
  if (timed_out) {
    ::kill(-pid, SIGKILL);
    ::waitpid(pid, &wstatus, 0);
    return {SolveStatus::Timeout, "", ms_since(t0)};
  }
  // stdout reached EOF; wait out the exit, still honoring the deadline.
  for (;;) {
    pid_t done = ::waitpid(pid, &wstatus, has_deadline ? WNOHANG : 0);
    if (done == pid || (done < 0 && errno != EINTR)) break;
    if (has_deadline) {
      if (Clock::now() >= deadline) {
        ::kill(-pid, SIGKILL);
        ::waitpid(pid, &wstatus, 0);
        return {SolveStatus::Timeout, "", ms_since(t0)};
      }
      ::usleep(2000);
    }
  }

  if (WIFEXITED(wstatus) && WEXITSTATUS(wstatus) == 127) {
    throw SolverSpawnError("command not found or not executable: " + command);
  }

  // First non-empty line is the status; everything after it is proof text.
  std::size_t pos = 0;
  std::string status_line;
  while (pos < output.size()) {
    std::size_t eol = output.find('\n', pos);
    std::string line = output.substr(pos, eol == std::string::npos ? std::string::npos
                                                                   : eol - pos);
    pos = eol == std::string::npos ? output.size() : eol + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::size_t first = line.find_first_not_of(' ');
    if (first != std::string::npos && first > 0) line.erase(0, first);
    if (!line.empty()) {
      status_line = line;
      break;
    }
  }
  SolveResult result;
  result.wall_ms = ms_since(t0);
  result.proof_text = output.substr(pos);
  if (status_line == "unsat") {
    result.status = SolveStatus::Unsat;
  } else if (status_line == "sat") {
    result.status = SolveStatus::Sat;
    result.proof_text.clear();
  } else if (status_line == "unknown") {
    result.status = SolveStatus::Unknown;
    result.proof_text.clear();
  } else {
    throw SolverOutputUnparsable(status_line.empty() ? "solver produced no output"
                                                     : "unrecognized status line: " + status_line);
  }
  return result;
}

}  // namespace cpck
