#pragma once

#include <cassert>
#include <utility>
#include <variant>

namespace recourse {

// Minimal expected-like carrier for operations whose failure is a normal
// data-dependent outcome rather than a caller bug.
template <class T, class E>
class Result {
 public:
  Result(T value) : data_(std::in_place_index<0>, std::move(value)) {}
  Result(E error) : data_(std::in_place_index<1>, std::move(error)) {}

  bool has_value() const { return data_.index() == 0; }
  explicit operator bool() const { return has_value(); }

  const T& value() const {
    assert(has_value());
    return std::get<0>(data_);
  }
  T& value() {
    assert(has_value());
    return std::get<0>(data_);
  }
  T take() {
    assert(has_value());
    return std::move(std::get<0>(data_));
  }

  const E& error() const {
    assert(!has_value());
    return std::get<1>(data_);
  }

 private:
  std::variant<T, E> data_;
};

}  // namespace recourse
