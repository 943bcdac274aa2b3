#pragma once

#include "adj/bag.hpp"
#include "adj/value.hpp"

#include <initializer_list>
#include <vector>

namespace adj::test {

inline Bag bag(std::initializer_list<int> items) {
    std::vector<Value> vs;
    for (int i : items) vs.emplace_back(i);
    return Bag::from_items(vs);
}

inline Bag sbag(std::initializer_list<const char*> items) {
    std::vector<Value> vs;
    for (const char* s : items) vs.emplace_back(s);
    return Bag::from_items(vs);
}

}  // namespace adj::test
