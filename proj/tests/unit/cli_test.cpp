#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hdconc/error.hpp"
#include "hdconc/metrics.hpp"
#include "json.hpp"
#include "run.hpp"
#include "table.hpp"
#include "tabular.hpp"

namespace hdconc::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kIris = fs::path(HDCONC_DATA_DIR) / "iris.csv";

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("hdconc_cli_test_" + std::to_string(std::random_device{}()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }

    static std::string slurp(const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

int invoke(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
    args.insert(args.begin(), "hdconc");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    if (out_text) {
        *out_text = out.str();
    }
    if (err_text) {
        *err_text = err.str();
    }
    return code;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

TEST(LoadDataset, Iris) {
    TabularOptions opts;
    opts.label_column = "class";
    const Dataset d = load_dataset(kIris, opts);
    EXPECT_EQ(d.n_samples(), 150u);
    EXPECT_EQ(d.n_features(), 4u);
    ASSERT_TRUE(d.labels().has_value());
    EXPECT_EQ(d.labels()->size(), 150u);
    EXPECT_EQ(d.labels()->front(), "setosa");
    EXPECT_DOUBLE_EQ(d.values()(0, 0), 5.1);
}

TEST(LoadDataset, RaggedRowNamed) {
    std::string text = "a,b,c\n";
    for (int line = 2; line <= 20; ++line) {
        text += line == 17 ? "1,2\n" : "1,2,3\n";
    }
    try {
        parse_dataset(text, {});
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("row 17"), std::string::npos) << e.what();
    }
}

TEST(LoadDataset, HeaderOnlyIsEmpty) {
    try {
        parse_dataset("a,b,c\n", {});
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("empty dataset"), std::string::npos);
    }
}

TEST(LoadDataset, NonNumericCellLocated) {
    try {
        parse_dataset("1,2\n3,x\n", {.header = HeaderMode::absent});
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("row 2"), std::string::npos) << what;
        EXPECT_NE(what.find("column 2"), std::string::npos) << what;
    }
}

TEST(LoadDataset, OnlyLabelColumn) {
    EXPECT_THROW(parse_dataset("name\nfoo\nbar\n", {.label_column = "name"}), DataError);
}

TEST(LoadDataset, WhitespaceAndIndexLabel) {
    const Dataset d = parse_dataset("1 2  3 a\n4\t5 6 b\n", {.delimiter = "whitespace", .header = HeaderMode::absent, .label_column = "3"});
    EXPECT_EQ(d.n_features(), 3u);
    EXPECT_EQ(d.labels()->at(1), "b");
    EXPECT_EQ(d.values()(1, 2), 6.0);
}

TEST(LoadDataset, MissingFile) {
    EXPECT_THROW(load_dataset("/nonexistent/hdconc/none.csv", {}), IoError);
}

TEST(EmitTable, EmptyRowsHeaderOnly) {
    Table t{{"a", "b"}, {}};
    EXPECT_EQ(to_csv(t), "a,b\n");
    EXPECT_EQ(to_json(t), "[]\n");
}

TEST(EmitTable, RealFormatting) {
    EXPECT_EQ(format_real(0.1), "0.1");
    EXPECT_EQ(format_real(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_real(2.5), "2.5");
    EXPECT_EQ(format_real(1e-20), "1e-20");
}

TEST(EmitTable, RowWidthChecked) {
    Table t{{"a", "b"}, {}};
    EXPECT_THROW(t.add_row({Cell{1.0}}), DimensionError);
}

TEST(EmitTable, CsvJsonRoundTrip) {
    Table t{{"name", "count", "value", "missing"}, {}};
    t.add_row({std::string("x,y"), std::int64_t{7}, 1.0 / 7.0, std::monostate{}});

    const auto csv = lines_of(to_csv(t));
    ASSERT_EQ(csv.size(), 2u);
    EXPECT_EQ(csv[0], "name,count,value,missing");
    EXPECT_EQ(csv[1], "\"x,y\",7,0.142857142857,");

    const auto json = nlohmann::json::parse(to_json(t));
    ASSERT_EQ(json.size(), 1u);
    EXPECT_EQ(json[0]["name"], "x,y");
    EXPECT_EQ(json[0]["count"], 7);
    EXPECT_TRUE(json[0]["missing"].is_null());
    const double v = json[0]["value"];
    EXPECT_EQ(format_real(v), "0.142857142857");
    EXPECT_NEAR(v, 1.0 / 7.0, 1e-12);
    EXPECT_EQ(std::stod(csv[1].substr(csv[1].find(",0.") + 1)), v);
}

TEST_F(TempDir, SameRowsByteIdentical) {
    Table t{{"a", "b"}, {}};
    t.add_row({1.25, std::int64_t{3}});
    t.add_row({-0.5, std::monostate{}});
    std::ostringstream sink;
    for (auto fmt : {OutputFormat::csv, OutputFormat::json}) {
        emit_table(t, fmt, dir_ / "one", sink);
        emit_table(t, fmt, dir_ / "two", sink);
        EXPECT_EQ(slurp(dir_ / "one"), slurp(dir_ / "two"));
        EXPECT_EQ(slurp(dir_ / "one"), render(t, fmt));
    }
    EXPECT_TRUE(sink.str().empty());
}

TEST_F(TempDir, UnwritablePathIsIoError) {
    Table t{{"a"}, {}};
    std::ostringstream sink;
    EXPECT_THROW(emit_table(t, OutputFormat::csv, dir_ / "missing" / "out.csv", sink), IoError);
}

TEST_F(TempDir, FailedRunLeavesNoFile) {
    const fs::path bad = write("bad.csv", "a,b\n1,2\n3\n");
    const fs::path out = dir_ / "out.csv";
    EXPECT_EQ(invoke({"analyze", "-i", bad.string(), "-o", out.string()}), kDataError);
    EXPECT_FALSE(fs::exists(out));

    write("out.csv", "previous");
    EXPECT_EQ(invoke({"analyze", "-i", bad.string(), "-o", out.string()}), kDataError);
    EXPECT_EQ(slurp(out), "previous");
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir_)) {
        ++entries;
    }
    EXPECT_EQ(entries, 2u);
}

TEST(RunCli, SimulateMinkowskiSchema) {
    std::string out;
    ASSERT_EQ(invoke({"simulate-minkowski", "--n", "100", "--k", "2", "--dims", "1,4,16,64,256,1024", "--trials",
                      "8", "--seed", "42"},
                     &out),
              kOk);
    const auto lines = lines_of(out);
    ASSERT_EQ(lines.size(), 1u + 6u * 8u);
    EXPECT_EQ(lines[0], "dim,trial,k,d_min,d_max,rdr,limit,lower_bound,upper_bound");
    EXPECT_EQ(lines[1].substr(0, 6), "1,0,2,");
}

TEST(RunCli, SimulateSummaryAndJson) {
    std::string out;
    ASSERT_EQ(invoke({"simulate-cosine", "--n", "20", "--dims", "2,8", "--trials", "3", "--summary", "--format",
                      "json", "--s", "-1", "--t", "1"},
                     &out),
              kOk);
    const auto json = nlohmann::json::parse(out);
    ASSERT_EQ(json.size(), 2u);
    EXPECT_EQ(json[1]["dim"], 8);
    EXPECT_EQ(json[1]["trials"], 3);
}

TEST(RunCli, OtherSimulateSchemas) {
    std::string out;
    ASSERT_EQ(invoke({"simulate-chebyshev", "--n", "10", "--dims", "3", "--trials", "1", "--s", "5", "--t", "10"},
                     &out),
              kOk);
    EXPECT_EQ(lines_of(out)[0], "dim,trial,n,d_min,d_max,rdr,mean,variance,expected_max,limit");
    ASSERT_EQ(invoke({"simulate-cosine", "--n", "10", "--dims", "3", "--trials", "1"}, &out), kOk);
    EXPECT_EQ(lines_of(out)[0], "dim,trial,n,d_min,d_max,mean,variance,limit");
    ASSERT_EQ(invoke({"simulate-pca", "--n", "10", "--dims", "3,30", "--trials", "1"}, &out), kOk);
    const auto lines = lines_of(out);
    EXPECT_EQ(lines[0], "dim,trial,n,mean_eigenvalue,limit,lambda_max,zero_count,pcs_90,ccr_top_n,ccr_bottom");
    EXPECT_EQ(lines.size(), 3u);
}

TEST(RunCli, AnalyzeMatchesLibrary) {
    std::string out;
    ASSERT_EQ(invoke({"analyze", "--input", kIris.string(), "--label-col", "class", "--metric", "minkowski", "--k",
                      "2", "--query", "centroid", "--format", "json"},
                     &out),
              kOk);
    const auto json = nlohmann::json::parse(out);
    ASSERT_EQ(json.size(), 1u);

    TabularOptions opts;
    opts.label_column = "class";
    const Dataset data = load_dataset(kIris, opts);
    const QueryPoint q(data.centroid());
    const auto stats = concentration_stats(data, q, Metric::minkowski(2.0));
    const auto& row = json[0];
    EXPECT_EQ(row["metric"], "minkowski");
    EXPECT_EQ(row["query"], "centroid");
    EXPECT_EQ(row["dim"], 4);
    EXPECT_EQ(row["n"], 150);
    EXPECT_EQ(format_real(row["d_min"]), format_real(stats.d_min));
    EXPECT_EQ(format_real(row["d_max"]), format_real(stats.d_max));
    EXPECT_EQ(format_real(row["rdr"]), format_real(*stats.rdr));
    EXPECT_EQ(format_real(row["mean"]), format_real(stats.mean));
    EXPECT_EQ(format_real(row["variance"]), format_real(stats.variance));
}

TEST(RunCli, AnalyzeQueries) {
    std::string out;
    EXPECT_EQ(invoke({"analyze", "-i", kIris.string(), "--label-col", "class", "--query", "origin"}, &out), kOk);
    EXPECT_EQ(invoke({"analyze", "-i", kIris.string(), "--label-col", "class", "--query", "row:3"}, &out), kOk);
    EXPECT_EQ(invoke({"analyze", "-i", kIris.string(), "--label-col", "class", "--query", "1,2,3,4"}, &out), kOk);
    EXPECT_EQ(invoke({"analyze", "-i", kIris.string(), "--label-col", "class", "--query", "1,2"}, &out),
              kDataError);
    EXPECT_EQ(invoke({"analyze", "-i", kIris.string(), "--label-col", "class", "--metric", "cosine", "--pairwise"},
                     &out),
              kOk);
}

TEST(RunCli, Density) {
    std::string out;
    ASSERT_EQ(invoke({"density", "--n", "10", "--intervals", "4", "--max-dim", "10"}, &out), kOk);
    const auto lines = lines_of(out);
    ASSERT_EQ(lines.size(), 11u);
    EXPECT_EQ(lines[0], "d,density,log_density");
    EXPECT_EQ(lines[1].substr(0, 6), "1,2.5,");
    EXPECT_EQ(lines[3].substr(0, 10), "3,0.15625,");
}

TEST(RunCli, PcaSpectrumIris) {
    std::string out;
    ASSERT_EQ(invoke({"pca-spectrum", "-i", kIris.string(), "--label-col", "class"}, &out), kOk);
    const auto lines = lines_of(out);
    ASSERT_EQ(lines.size(), 5u);
    EXPECT_EQ(lines[0], "component,eigenvalue,ccr");
    EXPECT_NE(lines[1].find(",0.924618723"), std::string::npos) << lines[1];
    ASSERT_EQ(invoke({"pca-spectrum", "-i", kIris.string(), "--label-col", "class", "--summary"}, &out), kOk);
    EXPECT_EQ(lines_of(out)[0], "dim,n,total_variance,lambda_max,zero_count,threshold,pcs_to_threshold,ccr_first");
}

TEST(RunCli, Theory) {
    std::string out;
    ASSERT_EQ(invoke({"theory", "--dims", "100", "--k", "1", "--n", "100", "--s", "-1", "--t", "3"}, &out), kOk);
    const auto lines = lines_of(out);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[0],
              "dim,k,n,s,t,minkowski_limit,rdr_lower,rdr_upper,chebyshev_expected_max,chebyshev_variance,"
              "cosine_limit,eigen_mean_limit");
}

TEST(RunCli, UsageErrors) {
    std::string err;
    EXPECT_EQ(invoke({}, nullptr, &err), kUsage);
    EXPECT_EQ(invoke({"no-such-command"}), kUsage);
    EXPECT_EQ(invoke({"simulate-minkowski", "--dims", "8,4"}, nullptr, &err), kUsage);
    EXPECT_FALSE(err.empty());
    EXPECT_EQ(invoke({"simulate-minkowski", "--k", "0.5"}), kUsage);
    EXPECT_EQ(invoke({"simulate-cosine", "--s", "2", "--t", "1"}), kUsage);
    EXPECT_EQ(invoke({"pca-spectrum", "-i", kIris.string(), "--label-col", "class", "--threshold", "0"}), kUsage);
    EXPECT_EQ(invoke({"analyze"}), kUsage);
}

TEST(RunCli, DataErrors) {
    std::string out;
    std::string err;
    EXPECT_EQ(invoke({"analyze", "-i", "/nonexistent/x.csv"}, &out, &err), kDataError);
    EXPECT_TRUE(out.empty());
    EXPECT_FALSE(err.empty());
    EXPECT_EQ(invoke({"analyze", "-i", kIris.string(), "--label-col", "nope"}), kDataError);
}

}  // namespace
}  // namespace hdconc::cli
