#pragma once

// Bernstein coefficient matrices of F on the subdivision boxes and of G2 on
// [0,1]^2, as exact "num/den" strings (rows: power of p, columns: power of x).

#include <array>
#include <string_view>

namespace expected {

using Matrix = std::array<std::array<std::string_view, 5>, 7>;

inline constexpr Matrix kQ1{{
    {"0", "0", "112/3", "103", "196"},
    {"0", "-34/3", "124/9", "415/6", "158"},
    {"512/15", "29/3", "1141/60", "3551/60", "4123/30"},
    {"199/2", "1209/20", "2453/48", "575/8", "5351/40"},
    {"2834/15", "64571/480", "25151/240", "16589/160", "17441/120"},
    {"3521/12", "7177/32", "50297/288", "607/4", "8261/48"},
    {"25827/64", "41391/128", "16507/64", "27783/128", "13983/64"},
}};

inline constexpr Matrix kQ2{{
    {"196", "289", "1228/3", "556", "736"},
    {"158", "1481/6", "3322/9", "528", "736"},
    {"4123/30", "12941/60", "19921/60", "4937/10", "10774/15"},
    {"5351/40", "7827/40", "71689/240", "3631/8", "3414/5"},
    {"17441/120", "89761/480", "4343/16", "198149/480", "38131/60"},
    {"8261/48", "4619/24", "73745/288", "12141/32", "2353/4"},
    {"13983/64", "28149/128", "16873/64", "47025/128", "35631/64"},
}};

inline constexpr Matrix kQ3{{
    {"25827/64", "41391/128", "16507/64", "27783/128", "13983/64"},
    {"49313/96", "27037/64", "49133/144", "18071/64", "25427/96"},
    {"151069/240", "7963/15", "157649/360", "3649/10", "26469/80"},
    {"29659/40", "2569/4", "43627/80", "9313/20", "4209/10"},
    {"16799/20", "90179/120", "59713/90", "70729/120", "10877/20"},
    {"5497/6", "10285/12", "798", "8975/12", "4295/6"},
    {"963", "963", "963", "963", "963"},
}};

inline constexpr Matrix kQ4{{
    {"13983/64", "28149/128", "16873/64", "47025/128", "35631/64"},
    {"25427/96", "47495/192", "2441/9", "22743/64", "16807/32"},
    {"26469/80", "11873/40", "21727/72", "21883/60", "122269/240"},
    {"4209/10", "7523/20", "29307/80", "16367/40", "21007/40"},
    {"10877/20", "11959/24", "21656/45", "20291/40", "35521/60"},
    {"4295/6", "2735/4", "2009/3", "8191/12", "1463/2"},
    {"963", "963", "963", "963", "963"},
}};

inline constexpr Matrix kQ11{{
    {"0", "0", "28/3", "215/8", "52"},
    {"0", "-17/6", "32/9", "583/32", "163/4"},
    {"128/15", "317/120", "16567/2880", "16421/960", "2191/60"},
    {"2019/80", "5147/320", "119909/7680", "119091/5120", "12501/320"},
    {"2969/60", "566747/15360", "750769/23040", "1111661/30720", "92093/1920"},
    {"30893/384", "65853/1024", "687673/12288", "42439/768", "64183/1024"},
    {"480003/4096", "1596537/16384", "1392057/16384", "1307517/16384", "338553/4096"},
}};

inline constexpr Matrix kQ12{{
    {"52", "617/8", "659/6", "299/2", "196"},
    {"163/4", "2025/32", "6745/72", "3157/24", "177"},
    {"2191/60", "17897/320", "240187/2880", "18999/160", "19483/120"},
    {"12501/320", "280941/5120", "605459/7680", "111", "48643/320"},
    {"92093/1920", "367063/6144", "183625/2304", "332063/3072", "55993/384"},
    {"64183/1024", "107671/1536", "350787/4096", "224847/2048", "220651/1536"},
    {"338553/4096", "1400907/16384", "1578837/16384", "1899297/16384", "595983/4096"},
}};

inline constexpr Matrix kQ13{{
    {"480003/4096", "1596537/16384", "1392057/16384", "1307517/16384", "338553/4096"},
    {"945721/6144", "1069713/8192", "2800825/24576", "2564503/24576", "210187/2048"},
    {"1005743/5120", "10410323/61440", "27388337/184320", "8255597/61440", "1964059/15360"},
    {"624031/2560", "2182609/10240", "1925727/10240", "346497/2048", "404011/2560"},
    {"1132141/3840", "4004671/15360", "10668157/46080", "3196279/15360", "736927/3840"},
    {"133817/384", "477931/1536", "1281499/4608", "128205/512", "29395/128"},
    {"25827/64", "93045/256", "83725/256", "75663/256", "17325/64"},
}};

inline constexpr Matrix kQ14{{
    {"338553/4096", "1400907/16384", "1578837/16384", "1899297/16384", "595983/4096"},
    {"210187/2048", "2479985/24576", "877263/8192", "999909/8192", "905345/6144"},
    {"1964059/15360", "497125/4096", "4519201/36864", "1629815/12288", "156895/1024"},
    {"404011/2560", "1499603/10240", "1459963/10240", "302057/2048", "417471/2560"},
    {"736927/3840", "2699137/15360", "1537061/9216", "852653/5120", "226571/1280"},
    {"29395/128", "106955/512", "898999/4608", "291607/1536", "74993/384"},
    {"17325/64", "62937/256", "58273/256", "55749/256", "13983/64"},
}};

inline constexpr Matrix kQ111{{
    {"0", "0", "7/3", "439/64", "431/32"},
    {"0", "-17/24", "65/72", "7225/1536", "2713/256"},
    {"32/15", "661/960", "23693/15360", "2197/480", "59645/6144"},
    {"4067/640", "21231/5120", "1034701/245760", "2109869/327680", "88153/8192"},
    {"6049/480", "944287/98304", "2174381/245760", "13412569/1310720", "26941817/1966080"},
    {"255581/12288", "556783/32768", "72585779/4718592", "16662671/1048576", "58100225/3145728"},
    {"8089155/262144", "54984213/2097152", "99545727/4194304", "195731055/8388608", "209583495/8388608"},
}};

inline constexpr Matrix kQ112{{
    {"431/32", "1285/64", "1381/48", "631/16", "52"},
    {"2713/256", "25331/1536", "28199/1152", "4411/128", "371/8"},
    {"59645/6144", "227921/15360", "338927/15360", "80139/2560", "10201/240"},
    {"88153/8192", "4942371/327680", "2641727/122880", "2452339/81920", "103317/2560"},
    {"26941817/1966080", "67529561/3932160", "7447817/327680", "29796421/983040", "1225589/30720"},
    {"58100225/3145728", "66212437/3145728", "121259051/4718592", "4243233/131072", "1345615/32768"},
    {"209583495/8388608", "223435935/8388608", "127250607/4194304", "75626793/2097152", "11484225/262144"},
}};

inline constexpr Matrix kQ113{{
    {"8089155/262144", "54984213/2097152", "99545727/4194304", "195731055/8388608", "209583495/8388608"},
    {"16088873/393216", "37167157/1048576", "605568427/18874368", "129080371/4194304", "396349585/12582912"},
    {"51939757/983040", "73158895/1572864", "1993607707/47185920", "419448987/10485760", "416937499/10485760"},
    {"2180003/32768", "77773049/1310720", "28389403/524288", "267038767/5242880", "260564127/5242880"},
    {"6708687/81920", "145129691/1966080", "798453347/11796480", "499235521/7864320", "160493139/2621440"},
    {"2428585/24576", "17664895/196608", "32542313/393216", "60985241/786432", "58387873/786432"},
    {"480003/4096", "3516549/32768", "6505143/65536", "12193311/131072", "11621391/131072"},
}};

inline constexpr Matrix kQ114{{
    {"209583495/8388608", "223435935/8388608", "127250607/4194304", "75626793/2097152", "11484225/262144"},
    {"396349585/12582912", "405458057/12582912", "660219259/18874368", "41680929/1048576", "6101765/131072"},
    {"416937499/10485760", "414426011/10485760", "1948400923/47185920", "354397343/7864320", "50008423/983040"},
    {"260564127/5242880", "254089487/5242880", "25799547/524288", "68079949/1310720", "1858157/32768"},
    {"160493139/2621440", "463723313/7864320", "691916723/11796480", "39525309/655360", "15727231/245760"},
    {"58387873/786432", "18596835/262144", "9115859/131072", "13782067/196608", "595285/8192"},
    {"11621391/131072", "11049471/131072", "5361303/65536", "2661729/32768", "338553/4096"},
}};

inline constexpr Matrix kG2{{
    {"0", "288", "576", "648", "288"},
    {"0", "1000/3", "6064/9", "760", "288"},
    {"288/5", "5968/15", "2252/3", "12772/15", "5384/15"},
    {"196", "2496/5", "12158/15", "910", "2504/5"},
    {"1904/5", "3103/5", "7606/9", "13583/15", "9284/15"},
    {"1328/3", "607", "2170/3", "2159/3", "524"},
    {"61", "61", "61", "61", "61"},
}};

}  // namespace expected
