#ifndef CQED_CSV_HPP
#define CQED_CSV_HPP

#include <fstream>
#include <string>
#include <vector>

namespace cqed {

// CSV with '#' metadata comment lines; numbers printed with %.17g so reruns
// are byte-identical.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path);

    void meta(const std::string& key, const std::string& value);
    void meta(const std::string& key, double value);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void text_row(const std::vector<std::string>& cells);

    static std::string format(double v);

  private:
    std::ofstream out_;
    std::string path_;
};

}  // namespace cqed

#endif
