#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ahatom/error.hpp"
#include "ahatom/reference_data.hpp"

using namespace ahatom;

TEST_CASE("reference CSV parsing") {
  const auto d = ReferenceDataset::parse(
      "# comment\nZ,label,value,unit\n18,E_HF,526.818,hartree\n11,IP_HF:2p,25.2,eV\n");
  CHECK(d.rows().size() == 2);
  CHECK(d.find(18, "E_HF") == 526.818);
  CHECK(d.find(11, "IP_HF:2p") == 25.2);
  CHECK_FALSE(d.find(18, "E_AH").has_value());
  CHECK(d.rows()[1].unit == Unit::eV);

  CHECK_THROWS_AS(ReferenceDataset::parse("Z,label,value,unit\n1,E,1,hartree\n1,E,2,hartree\n"),
                  InvalidArgument);
  CHECK_THROWS_AS(ReferenceDataset::parse("1,E,1,hartree\n"), InvalidArgument);
  CHECK_THROWS_AS(ReferenceDataset::parse("Z,label,value,unit\n1,E,x,hartree\n"),
                  InvalidArgument);
  CHECK_THROWS_AS(ReferenceDataset::parse("Z,label,value,unit\n1,E,1,furlong\n"),
                  InvalidArgument);
  CHECK_THROWS_AS(ReferenceDataset::parse("Z,label,value,unit\n1,E,1\n"), InvalidArgument);
  CHECK(ReferenceDataset::parse("Z,label,value,unit\n").rows().empty());
  CHECK(parse_unit("dimensionless") == Unit::dimensionless);
  CHECK(to_string(Unit::hartree) == "hartree");
}

TEST_CASE("reference files on disk") {
  const char* path = "reference_test_tmp.csv";
  {
    std::ofstream out(path);
    out << "Z,label,value,unit\n2,E_HF,2.8617,hartree\n";
  }
  CHECK(ReferenceDataset::load(path).find(2, "E_HF") == 2.8617);
  std::remove(path);
  CHECK_THROWS_AS(ReferenceDataset::load("/nonexistent/ref.csv"), InvalidArgument);
}

TEST_CASE("bundled transcription") {
  const auto& d = ReferenceDataset::bundled();
  for (int z = 1; z <= kMaxTabulatedZ; ++z) {
    CHECK(d.find(z, "E_AH").has_value());
    CHECK(d.find(z, "E_HF").has_value());
    for (const auto& shell : ip_shells(z)) {
      CHECK(d.find(z, "IP_AH:" + shell.label()).has_value());
      CHECK(d.find(z, "IP_HF:" + shell.label()).has_value());
    }
  }
  CHECK(d.find(18, "E_AH") == 526.722);
  CHECK(d.find(18, "E_HF") == 526.818);
}

TEST_CASE("bundled manifests") {
  CHECK(reference_configuration(24).to_string() == "1s2 2s2 2p6 3s2 3p6 4s1 3d5");
  CHECK(reference_configuration(19).to_string() == "1s2 2s2 2p6 3s2 3p6 4s1");
  for (int z = 1; z <= kMaxTabulatedZ; ++z) {
    CHECK(reference_configuration(z).total_electrons() == z);
    for (const auto& shell : ip_shells(z)) CHECK(reference_configuration(z).occupied(shell));
  }
  CHECK(ip_shells(1).size() == 1);
  CHECK(ip_shells(11).size() == 3);
  CHECK_THROWS_AS(reference_configuration(0), InvalidArgument);
  CHECK_THROWS_AS(ip_shells(61), InvalidArgument);
  CHECK_THROWS_AS(parse_configuration_manifest("3 1s2 2s1\n3 1s2 2p1\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_shell_manifest("3\n"), InvalidArgument);
}
