#pragma once

#include <stdexcept>
#include <string>

namespace triconflict {

//! Malformed or unusable input data: unreadable table, bad cell, size cap.
class TableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

//! An agent or issue id that does not exist in the table.
class UnknownIdError : public TableError {
public:
    explicit UnknownIdError(const std::string &id)
        : TableError("unknown id '" + id + "'") {}
};

//! An operation invoked outside its domain: empty subject under a degree
//! evaluation, scale kind mismatch, thresholds out of range, width mismatch.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

//! A region triple failed the partition check. This signals a defect in the
//! caller (or a corrupted trisection), never bad user input.
class PartitionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace triconflict
