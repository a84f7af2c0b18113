#include "subknn/matrix.hpp"

#include <cmath>
#include <string>

namespace subknn {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ContractError("Matrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
    check_finite("construction");
}

void Matrix::check_finite(const char* where) const {
    for (double v : data_) {
        if (!std::isfinite(v))
            throw NumericError(std::string("non-finite matrix entry after ") + where);
    }
}

}  // namespace subknn
