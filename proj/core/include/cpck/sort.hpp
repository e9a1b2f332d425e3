#pragma once

#include <memory>
#include <string>
#include <vector>

namespace cpck {

// Sorts of the supported fragment.  Nat never appears in SMT-LIB input or
// output; it exists only between goal parsing and the Nat-to-Int encoding
// pass, which eliminates it.
enum class SortKind { Bool, Int, Real, Nat, Uninterpreted };

class Sort {
public:
  Sort() : kind_(SortKind::Bool) {}

  static Sort boolean() { return Sort(SortKind::Bool); }
  static Sort integer() { return Sort(SortKind::Int); }
  static Sort real() { return Sort(SortKind::Real); }
  static Sort natural() { return Sort(SortKind::Nat); }
  static Sort uninterpreted(std::string name) {
    Sort s(SortKind::Uninterpreted);
    s.name_ = std::move(name);
    return s;
  }

  SortKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  bool is_bool() const { return kind_ == SortKind::Bool; }
  bool is_arith() const {
    return kind_ == SortKind::Int || kind_ == SortKind::Real || kind_ == SortKind::Nat;
  }
  bool is_nat() const { return kind_ == SortKind::Nat; }
  bool is_uninterpreted() const { return kind_ == SortKind::Uninterpreted; }

  // Nat is carried by Int for sorting purposes: base() collapses Nat to Int
  // and leaves everything else alone.
  Sort base() const { return kind_ == SortKind::Nat ? integer() : *this; }

  bool operator==(const Sort& o) const { return kind_ == o.kind_ && name_ == o.name_; }
  bool operator!=(const Sort& o) const { return !(*this == o); }

  std::string to_string() const {
    switch (kind_) {
      case SortKind::Bool: return "Bool";
      case SortKind::Int: return "Int";
      case SortKind::Real: return "Real";
      case SortKind::Nat: return "Nat";
      case SortKind::Uninterpreted: return name_;
    }
    return "?";
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(kind_) * 0x9e3779b97f4a7c15ull;
    for (char c : name_) h = h * 131 + static_cast<unsigned char>(c);
    return h;
  }

private:
  explicit Sort(SortKind k) : kind_(k) {}

  SortKind kind_;
  std::string name_;  // nonempty only for Uninterpreted
};

// Signature of a declared function symbol.  Terms applying the symbol share
// one FunSig instance, so sort checking needs no external symbol table.
struct FunSig {
  std::string name;
  std::vector<Sort> args;
  Sort result;

  bool operator==(const FunSig& o) const {
    return name == o.name && args == o.args && result == o.result;
  }
};

using FunSigPtr = std::shared_ptr<const FunSig>;

inline FunSigPtr mk_fun_sig(std::string name, std::vector<Sort> args, Sort result) {
  return std::make_shared<const FunSig>(FunSig{std::move(name), std::move(args), result});
}

}  // namespace cpck
