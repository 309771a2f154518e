#pragma once

// Tabulated volume quadrature rules on the reference triangle
// (vertices (-1,-1), (1,-1), (-1,1)).  One rule per exactness
// degree; entries are {x, y, w}.  Generated by
// scripts/generate_quadrature_tables.py.

#include <array>
#include <cstddef>

namespace swedg::tables {

inline constexpr std::array<std::array<double, 3>, 1> tri_rule_deg1 = {{
    {-0.33333333333333337, -0.3333333333333333, 2.0},
}};

inline constexpr std::array<std::array<double, 3>, 4> tri_rule_deg2 = {{
    {-0.6428825434727672, -0.6898979485566357, 0.6360827634879543},
    {0.33278049202940285, -0.6898979485566357, 0.6360827634879543},
    {-0.8499377795547838, 0.2898979485566358, 0.36391723651204566},
    {-0.439960169001852, 0.2898979485566358, 0.36391723651204566},
}};

inline constexpr std::array<std::array<double, 3>, 4> tri_rule_deg3 = {{
    {-0.6428825434727672, -0.6898979485566357, 0.6360827634879543},
    {0.33278049202940285, -0.6898979485566357, 0.6360827634879543},
    {-0.8499377795547838, 0.2898979485566358, 0.36391723651204566},
    {-0.439960169001852, 0.2898979485566358, 0.36391723651204566},
}};

inline constexpr std::array<std::array<double, 3>, 9> tri_rule_deg4 = {{
    {-0.7945646903807475, -0.8228240809745921, 0.22325768193217743},
    {-0.08858795951270393, -0.8228240809745921, 0.3572122910914835},
    {0.6173887713553396, -0.8228240809745921, 0.22325768193217743},
    {-0.866891864321671, -0.1810662711185305, 0.2547123403995403},
    {-0.40946686444073477, -0.1810662711185305, 0.40753974463926407},
    {0.047958135440201444, -0.1810662711185305, 0.2547123403995403},
    {-0.9521377354258388, 0.5753189235216941, 0.077585533223838},
    {-0.787659461760847, 0.5753189235216941, 0.12413685315814067},
    {-0.6231811880958553, 0.5753189235216941, 0.077585533223838},
}};

inline constexpr std::array<std::array<double, 3>, 9> tri_rule_deg5 = {{
    {-0.7945646903807475, -0.8228240809745921, 0.22325768193217743},
    {-0.08858795951270393, -0.8228240809745921, 0.3572122910914835},
    {0.6173887713553396, -0.8228240809745921, 0.22325768193217743},
    {-0.866891864321671, -0.1810662711185305, 0.2547123403995403},
    {-0.40946686444073477, -0.1810662711185305, 0.40753974463926407},
    {0.047958135440201444, -0.1810662711185305, 0.2547123403995403},
    {-0.9521377354258388, 0.5753189235216941, 0.077585533223838},
    {-0.787659461760847, 0.5753189235216941, 0.12413685315814067},
    {-0.6231811880958553, 0.5753189235216941, 0.077585533223838},
}};

inline constexpr std::array<std::array<double, 3>, 16> tri_rule_deg6 = {{
    {-0.869066010889971, -0.8857916077709646, 0.0942734727735296},
    {-0.37767089551128596, -0.8857916077709646, 0.17674035408944744},
    {0.2634625032822504, -0.8857916077709646, 0.17674035408944744},
    {0.7548576186609355, -0.8857916077709646, 0.0942734727735296},
    {-0.8995797535772605, -0.44631397272375245, 0.14155227159234357},
    {-0.5227026805371142, -0.44631397272375245, 0.26537686442819863},
    {-0.0309833467391335, -0.44631397272375245, 0.26537686442819863},
    {0.34589372630101267, -0.44631397272375245, 0.14155227159234357},
    {-0.942175831551222, 0.16718086473783364, 0.09033619712947963},
    {-0.7251617917308513, 0.16718086473783364, 0.16935889808698504},
    {-0.4420190730069824, 0.16718086473783364, 0.16935889808698504},
    {-0.2250050331866117, 0.16718086473783364, 0.09033619712947963},
    {-0.9805924297461077, 0.7204802713124389, 0.021692903642101014},
    {-0.9077558401870959, 0.7204802713124389, 0.04066903825791515},
    {-0.812724431125343, 0.7204802713124389, 0.04066903825791515},
    {-0.739887841566331, 0.7204802713124389, 0.021692903642101014},
}};

inline constexpr std::array<std::array<double, 3>, 16> tri_rule_deg7 = {{
    {-0.869066010889971, -0.8857916077709646, 0.0942734727735296},
    {-0.37767089551128596, -0.8857916077709646, 0.17674035408944744},
    {0.2634625032822504, -0.8857916077709646, 0.17674035408944744},
    {0.7548576186609355, -0.8857916077709646, 0.0942734727735296},
    {-0.8995797535772605, -0.44631397272375245, 0.14155227159234357},
    {-0.5227026805371142, -0.44631397272375245, 0.26537686442819863},
    {-0.0309833467391335, -0.44631397272375245, 0.26537686442819863},
    {0.34589372630101267, -0.44631397272375245, 0.14155227159234357},
    {-0.942175831551222, 0.16718086473783364, 0.09033619712947963},
    {-0.7251617917308513, 0.16718086473783364, 0.16935889808698504},
    {-0.4420190730069824, 0.16718086473783364, 0.16935889808698504},
    {-0.2250050331866117, 0.16718086473783364, 0.09033619712947963},
    {-0.9805924297461077, 0.7204802713124389, 0.021692903642101014},
    {-0.9077558401870959, 0.7204802713124389, 0.04066903825791515},
    {-0.812724431125343, 0.7204802713124389, 0.04066903825791515},
    {-0.739887841566331, 0.7204802713124389, 0.021692903642101014},
}};

inline constexpr std::array<std::array<double, 3>, 25> tri_rule_deg8 = {{
    {-0.9099148128603926, -0.9203802858970626, 0.04586032140637007},
    {-0.5568427808952416, -0.9203802858970626, 0.09264488771799337},
    {-0.03980985705146867, -0.9203802858970626, 0.11011594265787904},
    {0.4772230667923041, -0.9203802858970626, 0.09264488771799337},
    {0.8302950987574551, -0.9203802858970626, 0.04586032140637007},
    {-0.9247574953097776, -0.6039731642527836, 0.07921633252818944},
    {-0.6298585794652212, -0.6039731642527836, 0.16002914954464184},
    {-0.19801341787360816, -0.6039731642527836, 0.19020758823181622},
    {0.23383174371800464, -0.6039731642527836, 0.16002914954464184},
    {0.5287306595625612, -0.6039731642527836, 0.07921633252818944},
    {-0.9472707101110581, -0.1240503795052277, 0.06936602572546278},
    {-0.7406081264354918, -0.1240503795052277, 0.14013001801348693},
    {-0.43797481024738616, -0.1240503795052277, 0.16655586086077995},
    {-0.13534149405928064, -0.1240503795052277, 0.14013001801348693},
    {0.0713210896162857, -0.1240503795052277, 0.06936602572546278},
    {-0.9714284112088573, 0.39092854670727223, 0.035021996728655316},
    {-0.8594474159834365, 0.39092854670727223, 0.07074980844193388},
    {-0.6954642733536361, 0.39092854670727223, 0.08409186994928833},
    {-0.5314811307238357, 0.39092854670727223, 0.07074980844193388},
    {-0.41950013549841514, 0.39092854670727223, 0.035021996728655316},
    {-0.9907554230699072, 0.8029298284023472, 0.007462208667511361},
    {-0.954523033872472, 0.8029298284023472, 0.015074806781310505},
    {-0.9014649142011736, 0.8029298284023472, 0.017917627189125464},
    {-0.8484067945298752, 0.8029298284023472, 0.015074806781310505},
    {-0.81217440533244, 0.8029298284023472, 0.007462208667511361},
}};

inline constexpr std::array<std::array<double, 3>, 25> tri_rule_deg9 = {{
    {-0.9099148128603926, -0.9203802858970626, 0.04586032140637007},
    {-0.5568427808952416, -0.9203802858970626, 0.09264488771799337},
    {-0.03980985705146867, -0.9203802858970626, 0.11011594265787904},
    {0.4772230667923041, -0.9203802858970626, 0.09264488771799337},
    {0.8302950987574551, -0.9203802858970626, 0.04586032140637007},
    {-0.9247574953097776, -0.6039731642527836, 0.07921633252818944},
    {-0.6298585794652212, -0.6039731642527836, 0.16002914954464184},
    {-0.19801341787360816, -0.6039731642527836, 0.19020758823181622},
    {0.23383174371800464, -0.6039731642527836, 0.16002914954464184},
    {0.5287306595625612, -0.6039731642527836, 0.07921633252818944},
    {-0.9472707101110581, -0.1240503795052277, 0.06936602572546278},
    {-0.7406081264354918, -0.1240503795052277, 0.14013001801348693},
    {-0.43797481024738616, -0.1240503795052277, 0.16655586086077995},
    {-0.13534149405928064, -0.1240503795052277, 0.14013001801348693},
    {0.0713210896162857, -0.1240503795052277, 0.06936602572546278},
    {-0.9714284112088573, 0.39092854670727223, 0.035021996728655316},
    {-0.8594474159834365, 0.39092854670727223, 0.07074980844193388},
    {-0.6954642733536361, 0.39092854670727223, 0.08409186994928833},
    {-0.5314811307238357, 0.39092854670727223, 0.07074980844193388},
    {-0.41950013549841514, 0.39092854670727223, 0.035021996728655316},
    {-0.9907554230699072, 0.8029298284023472, 0.007462208667511361},
    {-0.954523033872472, 0.8029298284023472, 0.015074806781310505},
    {-0.9014649142011736, 0.8029298284023472, 0.017917627189125464},
    {-0.8484067945298752, 0.8029298284023472, 0.015074806781310505},
    {-0.81217440533244, 0.8029298284023472, 0.007462208667511361},
}};

inline constexpr std::array<std::array<double, 3>, 36> tri_rule_deg10 = {{
    {-0.9344492667710802, -0.9413671456804301, 0.024777061410635445},
    {-0.6711415168103452, -0.9413671456804301, 0.05217357732033147},
    {-0.2609401512552467, -0.9413671456804301, 0.06767002272005086},
    {0.20230729693567673, -0.9413671456804301, 0.06767002272005086},
    {0.6125086624907752, -0.9413671456804301, 0.05217357732033147},
    {0.8758164124515102, -0.9413671456804301, 0.024777061410635445},
    {-0.9424693339748818, -0.7038428006630314, 0.04644349906799003},
    {-0.7113770260991668, -0.7038428006630314, 0.09779704903223128},
    {-0.35136339082244805, -0.7038428006630314, 0.12684444636281603},
    {0.05520619148547934, -0.7038428006630314, 0.12684444636281603},
    {0.41521982676219804, -0.7038428006630314, 0.09779704903223128},
    {0.646312134637913, -0.7038428006630314, 0.04644349906799003},
    {-0.9552262540439388, -0.3260306194376914, 0.04824242561706035},
    {-0.7753766364380926, -0.3260306194376914, 0.10158508635619054},
    {-0.49519286384696404, -0.3260306194376914, 0.13175759560314673},
    {-0.17877651671534456, -0.3260306194376914, 0.13175759560314673},
    {0.10140725587578392, -0.3260306194376914, 0.10158508635619054},
    {0.2812568734816301, -0.3260306194376914, 0.04824242561706035},
    {-0.9701968732666577, 0.1173430375431003, 0.03380614318777243},
    {-0.8504820530747018, 0.1173430375431003, 0.07118630398810505},
    {-0.6639809617576163, 0.1173430375431003, 0.09232985460543292},
    {-0.45336207578548393, 0.1173430375431003, 0.09232985460543292},
    {-0.26686098446839845, 0.1173430375431003, 0.07118630398810505},
    {-0.14714616427644256, 0.1173430375431003, 0.03380614318777243},
    {-0.9844162505974271, 0.538467724060109, 0.015061192850766672},
    {-0.9218185985343516, 0.538467724060109, 0.03171466933518592},
    {-0.8242990900480056, 0.538467724060109, 0.04113446891506532},
    {-0.7141686340121034, 0.538467724060109, 0.04113446891506532},
    {-0.6166491255257576, 0.538467724060109, 0.03171466933518592},
    {-0.5540514734626818, 0.538467724060109, 0.015061192850766672},
    {-0.9950666056946595, 0.8538913426394822, 0.0029941702449452694},
    {-0.97524987916512, 0.8538913426394822, 0.006304887016094351},
    {-0.9443778357692788, 0.8538913426394822, 0.008177546366179437},
    {-0.9095135068702034, 0.8538913426394822, 0.008177546366179437},
    {-0.8786414634743622, 0.8538913426394822, 0.006304887016094351},
    {-0.8588247369448226, 0.8538913426394822, 0.0029941702449452694},
}};

inline constexpr std::array<std::array<double, 3>, 36> tri_rule_deg11 = {{
    {-0.9344492667710802, -0.9413671456804301, 0.024777061410635445},
    {-0.6711415168103452, -0.9413671456804301, 0.05217357732033147},
    {-0.2609401512552467, -0.9413671456804301, 0.06767002272005086},
    {0.20230729693567673, -0.9413671456804301, 0.06767002272005086},
    {0.6125086624907752, -0.9413671456804301, 0.05217357732033147},
    {0.8758164124515102, -0.9413671456804301, 0.024777061410635445},
    {-0.9424693339748818, -0.7038428006630314, 0.04644349906799003},
    {-0.7113770260991668, -0.7038428006630314, 0.09779704903223128},
    {-0.35136339082244805, -0.7038428006630314, 0.12684444636281603},
    {0.05520619148547934, -0.7038428006630314, 0.12684444636281603},
    {0.41521982676219804, -0.7038428006630314, 0.09779704903223128},
    {0.646312134637913, -0.7038428006630314, 0.04644349906799003},
    {-0.9552262540439388, -0.3260306194376914, 0.04824242561706035},
    {-0.7753766364380926, -0.3260306194376914, 0.10158508635619054},
    {-0.49519286384696404, -0.3260306194376914, 0.13175759560314673},
    {-0.17877651671534456, -0.3260306194376914, 0.13175759560314673},
    {0.10140725587578392, -0.3260306194376914, 0.10158508635619054},
    {0.2812568734816301, -0.3260306194376914, 0.04824242561706035},
    {-0.9701968732666577, 0.1173430375431003, 0.03380614318777243},
    {-0.8504820530747018, 0.1173430375431003, 0.07118630398810505},
    {-0.6639809617576163, 0.1173430375431003, 0.09232985460543292},
    {-0.45336207578548393, 0.1173430375431003, 0.09232985460543292},
    {-0.26686098446839845, 0.1173430375431003, 0.07118630398810505},
    {-0.14714616427644256, 0.1173430375431003, 0.03380614318777243},
    {-0.9844162505974271, 0.538467724060109, 0.015061192850766672},
    {-0.9218185985343516, 0.538467724060109, 0.03171466933518592},
    {-0.8242990900480056, 0.538467724060109, 0.04113446891506532},
    {-0.7141686340121034, 0.538467724060109, 0.04113446891506532},
    {-0.6166491255257576, 0.538467724060109, 0.03171466933518592},
    {-0.5540514734626818, 0.538467724060109, 0.015061192850766672},
    {-0.9950666056946595, 0.8538913426394822, 0.0029941702449452694},
    {-0.97524987916512, 0.8538913426394822, 0.006304887016094351},
    {-0.9443778357692788, 0.8538913426394822, 0.008177546366179437},
    {-0.9095135068702034, 0.8538913426394822, 0.008177546366179437},
    {-0.8786414634743622, 0.8538913426394822, 0.006304887016094351},
    {-0.8588247369448226, 0.8538913426394822, 0.0029941702449452694},
}};

inline constexpr std::array<std::array<double, 3>, 49> tri_rule_deg12 = {{
    {-0.9502519352478783, -0.955041227122575, 0.014493864318903127},
    {-0.7473414059606616, -0.955041227122575, 0.031308746593980266},
    {-0.4192013878240194, -0.955041227122575, 0.04274004240525971},
    {-0.0224793864387125, -0.955041227122575, 0.046784147057677236},
    {0.3742426149465943, -0.955041227122575, 0.04274004240525971},
    {0.7023826330832366, -0.955041227122575, 0.031308746593980266},
    {0.9052931623704534, -0.955041227122575, 0.014493864318903127},
    {-0.9549441687686726, -0.7706418936781917, 0.028618575116384565},
    {-0.7711721445064774, -0.7706418936781917, 0.061820070650936136},
    {-0.4739822668483976, -0.7706418936781917, 0.08439151127260956},
    {-0.1146790531609041, -0.7706418936781917, 0.09237671868363699},
    {0.2446241605265893, -0.7706418936781917, 0.08439151127260956},
    {0.5418140381846692, -0.7706418936781917, 0.061820070650936136},
    {0.7255860624468644, -0.7706418936781917, 0.028618575116384565},
    {-0.9626345113023145, -0.4684203544308209, 0.03299041205411841},
    {-0.8102295659742744, -0.4684203544308209, 0.07126384160270327},
    {-0.5637654632994034, -0.4684203544308209, 0.09728334549958856},
    {-0.2657898227845895, -0.4684203544308209, 0.10648839088553352},
    {0.03218581773022433, -0.4684203544308209, 0.09728334549958856},
    {0.2786499204050954, -0.4684203544308209, 0.07126384160270327},
    {0.43105486573313545, -0.4684203544308209, 0.03299041205411841},
    {-0.9721542096868078, -0.09430725266111074, 0.027742171014936378},
    {-0.8585778509073494, -0.09430725266111074, 0.05992691687755772},
    {-0.6749060199742607, -0.09430725266111074, 0.08180713849003932},
    {-0.4528463736694446, -0.09430725266111074, 0.08954781001842833},
    {-0.23078672736462857, -0.09430725266111074, 0.08180713849003932},
    {-0.047114896431539766, -0.09430725266111074, 0.05992691687755772},
    {0.0664614623479185, -0.09430725266111074, 0.027742171014936378},
    {-0.9820541919865665, 0.2947505657736607, 0.01719164035192975},
    {-0.9088575074394101, 0.2947505657736607, 0.03713631502755423},
    {-0.7904863145830365, 0.2947505657736607, 0.05069534400837125},
    {-0.6473752828868303, 0.2947505657736607, 0.05549218708625577},
    {-0.5042642511906241, 0.2947505657736607, 0.05069534400837125},
    {-0.3858930583342506, 0.2947505657736607, 0.03713631502755423},
    {-0.31269637378709414, 0.2947505657736607, 0.01719164035192975},
    {-0.9908271749167242, 0.6395186165262152, 0.007097940285752214},
    {-0.9534134021000205, 0.6395186165262152, 0.015332530293938738},
    {-0.8929091190854335, 0.6395186165262152, 0.02093066846275053},
    {-0.8197593082631076, 0.6395186165262152, 0.022911148802610967},
    {-0.7466094974407818, 0.6395186165262152, 0.02093066846275053},
    {-0.6861052144261948, 0.6395186165262152, 0.015332530293938738},
    {-0.648691441609491, 0.6395186165262152, 0.007097940285752214},
    {-0.9971366808373341, 0.8874748789261557, 0.001350363026845498},
    {-0.9854578826828795, 0.8874748789261557, 0.002916970442606256},
    {-0.966571326861065, 0.8874748789261557, 0.003982000366499857},
    {-0.9437374394630779, 0.8874748789261557, 0.004358781139326339},
    {-0.9209035520650908, 0.8874748789261557, 0.003982000366499857},
    {-0.9020169962432762, 0.8874748789261557, 0.002916970442606256},
    {-0.8903381980888216, 0.8874748789261557, 0.001350363026845498},
}};

inline constexpr std::array<std::array<double, 3>, 49> tri_rule_deg13 = {{
    {-0.9502519352478783, -0.955041227122575, 0.014493864318903127},
    {-0.7473414059606616, -0.955041227122575, 0.031308746593980266},
    {-0.4192013878240194, -0.955041227122575, 0.04274004240525971},
    {-0.0224793864387125, -0.955041227122575, 0.046784147057677236},
    {0.3742426149465943, -0.955041227122575, 0.04274004240525971},
    {0.7023826330832366, -0.955041227122575, 0.031308746593980266},
    {0.9052931623704534, -0.955041227122575, 0.014493864318903127},
    {-0.9549441687686726, -0.7706418936781917, 0.028618575116384565},
    {-0.7711721445064774, -0.7706418936781917, 0.061820070650936136},
    {-0.4739822668483976, -0.7706418936781917, 0.08439151127260956},
    {-0.1146790531609041, -0.7706418936781917, 0.09237671868363699},
    {0.2446241605265893, -0.7706418936781917, 0.08439151127260956},
    {0.5418140381846692, -0.7706418936781917, 0.061820070650936136},
    {0.7255860624468644, -0.7706418936781917, 0.028618575116384565},
    {-0.9626345113023145, -0.4684203544308209, 0.03299041205411841},
    {-0.8102295659742744, -0.4684203544308209, 0.07126384160270327},
    {-0.5637654632994034, -0.4684203544308209, 0.09728334549958856},
    {-0.2657898227845895, -0.4684203544308209, 0.10648839088553352},
    {0.03218581773022433, -0.4684203544308209, 0.09728334549958856},
    {0.2786499204050954, -0.4684203544308209, 0.07126384160270327},
    {0.43105486573313545, -0.4684203544308209, 0.03299041205411841},
    {-0.9721542096868078, -0.09430725266111074, 0.027742171014936378},
    {-0.8585778509073494, -0.09430725266111074, 0.05992691687755772},
    {-0.6749060199742607, -0.09430725266111074, 0.08180713849003932},
    {-0.4528463736694446, -0.09430725266111074, 0.08954781001842833},
    {-0.23078672736462857, -0.09430725266111074, 0.08180713849003932},
    {-0.047114896431539766, -0.09430725266111074, 0.05992691687755772},
    {0.0664614623479185, -0.09430725266111074, 0.027742171014936378},
    {-0.9820541919865665, 0.2947505657736607, 0.01719164035192975},
    {-0.9088575074394101, 0.2947505657736607, 0.03713631502755423},
    {-0.7904863145830365, 0.2947505657736607, 0.05069534400837125},
    {-0.6473752828868303, 0.2947505657736607, 0.05549218708625577},
    {-0.5042642511906241, 0.2947505657736607, 0.05069534400837125},
    {-0.3858930583342506, 0.2947505657736607, 0.03713631502755423},
    {-0.31269637378709414, 0.2947505657736607, 0.01719164035192975},
    {-0.9908271749167242, 0.6395186165262152, 0.007097940285752214},
    {-0.9534134021000205, 0.6395186165262152, 0.015332530293938738},
    {-0.8929091190854335, 0.6395186165262152, 0.02093066846275053},
    {-0.8197593082631076, 0.6395186165262152, 0.022911148802610967},
    {-0.7466094974407818, 0.6395186165262152, 0.02093066846275053},
    {-0.6861052144261948, 0.6395186165262152, 0.015332530293938738},
    {-0.648691441609491, 0.6395186165262152, 0.007097940285752214},
    {-0.9971366808373341, 0.8874748789261557, 0.001350363026845498},
    {-0.9854578826828795, 0.8874748789261557, 0.002916970442606256},
    {-0.966571326861065, 0.8874748789261557, 0.003982000366499857},
    {-0.9437374394630779, 0.8874748789261557, 0.004358781139326339},
    {-0.9209035520650908, 0.8874748789261557, 0.003982000366499857},
    {-0.9020169962432762, 0.8874748789261557, 0.002916970442606256},
    {-0.8903381980888216, 0.8874748789261557, 0.001350363026845498},
}};

inline constexpr std::array<std::array<double, 3>, 64> tri_rule_deg14 = {{
    {-0.9609958994794997, -0.9644401697052731, 0.009019625432158401},
    {-0.8002817301918269, -0.9644401697052731, 0.019814507919305502},
    {-0.5339684034081906, -0.9644401697052731, 0.027951766814851422},
    {-0.19795310526435372, -0.9644401697052731, 0.03231570855679676},
    {0.16239327496962686, -0.9644401697052731, 0.03231570855679676},
    {0.49840857311346376, -0.9644401697052731, 0.027951766814851422},
    {0.7647218998971002, -0.9644401697052731, 0.019814507919305502},
    {0.925436069184773, -0.9644401697052731, 0.009019625432158401},
    {-0.9639163300723999, -0.817352784200412, 0.018447690781836515},
    {-0.8152356283031885, -0.817352784200412, 0.040526285469276606},
    {-0.5688625020742903, -0.817352784200412, 0.05716928656126956},
    {-0.2580063370289323, -0.817352784200412, 0.06609478446036487},
    {0.0753591212293443, -0.817352784200412, 0.06609478446036487},
    {0.38621528627470236, -0.817352784200412, 0.05716928656126956},
    {0.6325884125036005, -0.817352784200412, 0.040526285469276606},
    {0.7812691142728119, -0.817352784200412, 0.018447690781836515},
    {-0.9688000769681315, -0.5713830412087385, 0.022777594809232825},
    {-0.8402425754492695, -0.5713830412087385, 0.05003831213667961},
    {-0.62721483766967, -0.5713830412087385, 0.0705876339876444},
    {-0.3584315225895567, -0.5713830412087385, 0.08160805800821729},
    {-0.0701854362017047, -0.5713830412087385, 0.08160805800821729},
    {0.19859787887840863, -0.5713830412087385, 0.0705876339876444},
    {0.4116256166580081, -0.5713830412087385, 0.05003831213667961},
    {0.5401831181768704, -0.5713830412087385, 0.022777594809232825},
    {-0.97505933612632, -0.2561356708334554, 0.021470037946317095},
    {-0.8722927546015182, -0.2561356708334554, 0.04716584298482193},
    {-0.7020021677207575, -0.2561356708334554, 0.06653552286570472},
    {-0.4871415634359564, -0.2561356708334554, 0.07692331507501628},
    {-0.25672276573058816, -0.2561356708334554, 0.07692331507501628},
    {-0.04186216144578703, -0.2561356708334554, 0.06653552286570472},
    {0.12842842543497368, -0.2561356708334554, 0.04716584298482193},
    {0.23119500695977546, -0.2561356708334554, 0.021470037946317095},
    {-0.9819392979867129, 0.09037336960685335, 0.016034519062782897},
    {-0.9075212065018943, 0.09037336960685335, 0.035224977726789834},
    {-0.7842058224007168, 0.09037336960685335, 0.04969088142321502},
    {-0.6286152026787715, 0.09037336960685335, 0.057448820771850664},
    {-0.4617581669280819, 0.09037336960685335, 0.057448820771850664},
    {-0.3061675472061366, 0.09037336960685335, 0.04969088142321502},
    {-0.1828521631049591, 0.09037336960685335, 0.035224977726789834},
    {-0.10843407162014052, 0.09037336960685335, 0.016034519062782897},
    {-0.9886101477337353, 0.4263504857111389, 0.009199511606982775},
    {-0.9416789117648419, 0.4263504857111389, 0.020209685752624707},
    {-0.8639109487013479, 0.4263504857111389, 0.02850923302558555},
    {-0.7657888396412597, 0.4263504857111389, 0.03296020862420481},
    {-0.6605616460698792, 0.4263504857111389, 0.03296020862420481},
    {-0.562439537009791, 0.4263504857111389, 0.02850923302558555},
    {-0.484671573946297, 0.4263504857111389, 0.020209685752624707},
    {-0.4377403379774035, 0.4263504857111389, 0.009199511606982775},
    {-0.9942671952159429, 0.7112674859157089, 0.003612421838074282},
    {-0.9706455004130107, 0.7112674859157089, 0.007935846300578168},
    {-0.9315028899318134, 0.7112674859157089, 0.011194874289870182},
    {-0.8821155157068155, 0.7112674859157089, 0.012942662883449817},
    {-0.8291519702088934, 0.7112674859157089, 0.012942662883449817},
    {-0.7797645959838955, 0.7112674859157089, 0.011194874289870182},
    {-0.7406219855026981, 0.7112674859157089, 0.007935846300578168},
    {-0.717000290699766, 0.7112674859157089, 0.003612421838074282},
    {-0.9982275792303528, 0.9107320894200603, 0.0006671348129908288},
    {-0.9909244206439277, 0.9107320894200603, 0.001465576163298377},
    {-0.9788226347976657, 0.9107320894200603, 0.002067446909746759},
    {-0.9635534583418126, 0.9107320894200603, 0.0023902249984615676},
    {-0.9471786310782477, 0.9107320894200603, 0.0023902249984615676},
    {-0.9319094546223946, 0.9107320894200603, 0.002067446909746759},
    {-0.9198076687761326, 0.9107320894200603, 0.001465576163298377},
    {-0.9125045101897076, 0.9107320894200603, 0.0006671348129908288},
}};

inline constexpr std::array<std::array<double, 3>, 64> tri_rule_deg15 = {{
    {-0.9609958994794997, -0.9644401697052731, 0.009019625432158401},
    {-0.8002817301918269, -0.9644401697052731, 0.019814507919305502},
    {-0.5339684034081906, -0.9644401697052731, 0.027951766814851422},
    {-0.19795310526435372, -0.9644401697052731, 0.03231570855679676},
    {0.16239327496962686, -0.9644401697052731, 0.03231570855679676},
    {0.49840857311346376, -0.9644401697052731, 0.027951766814851422},
    {0.7647218998971002, -0.9644401697052731, 0.019814507919305502},
    {0.925436069184773, -0.9644401697052731, 0.009019625432158401},
    {-0.9639163300723999, -0.817352784200412, 0.018447690781836515},
    {-0.8152356283031885, -0.817352784200412, 0.040526285469276606},
    {-0.5688625020742903, -0.817352784200412, 0.05716928656126956},
    {-0.2580063370289323, -0.817352784200412, 0.06609478446036487},
    {0.0753591212293443, -0.817352784200412, 0.06609478446036487},
    {0.38621528627470236, -0.817352784200412, 0.05716928656126956},
    {0.6325884125036005, -0.817352784200412, 0.040526285469276606},
    {0.7812691142728119, -0.817352784200412, 0.018447690781836515},
    {-0.9688000769681315, -0.5713830412087385, 0.022777594809232825},
    {-0.8402425754492695, -0.5713830412087385, 0.05003831213667961},
    {-0.62721483766967, -0.5713830412087385, 0.0705876339876444},
    {-0.3584315225895567, -0.5713830412087385, 0.08160805800821729},
    {-0.0701854362017047, -0.5713830412087385, 0.08160805800821729},
    {0.19859787887840863, -0.5713830412087385, 0.0705876339876444},
    {0.4116256166580081, -0.5713830412087385, 0.05003831213667961},
    {0.5401831181768704, -0.5713830412087385, 0.022777594809232825},
    {-0.97505933612632, -0.2561356708334554, 0.021470037946317095},
    {-0.8722927546015182, -0.2561356708334554, 0.04716584298482193},
    {-0.7020021677207575, -0.2561356708334554, 0.06653552286570472},
    {-0.4871415634359564, -0.2561356708334554, 0.07692331507501628},
    {-0.25672276573058816, -0.2561356708334554, 0.07692331507501628},
    {-0.04186216144578703, -0.2561356708334554, 0.06653552286570472},
    {0.12842842543497368, -0.2561356708334554, 0.04716584298482193},
    {0.23119500695977546, -0.2561356708334554, 0.021470037946317095},
    {-0.9819392979867129, 0.09037336960685335, 0.016034519062782897},
    {-0.9075212065018943, 0.09037336960685335, 0.035224977726789834},
    {-0.7842058224007168, 0.09037336960685335, 0.04969088142321502},
    {-0.6286152026787715, 0.09037336960685335, 0.057448820771850664},
    {-0.4617581669280819, 0.09037336960685335, 0.057448820771850664},
    {-0.3061675472061366, 0.09037336960685335, 0.04969088142321502},
    {-0.1828521631049591, 0.09037336960685335, 0.035224977726789834},
    {-0.10843407162014052, 0.09037336960685335, 0.016034519062782897},
    {-0.9886101477337353, 0.4263504857111389, 0.009199511606982775},
    {-0.9416789117648419, 0.4263504857111389, 0.020209685752624707},
    {-0.8639109487013479, 0.4263504857111389, 0.02850923302558555},
    {-0.7657888396412597, 0.4263504857111389, 0.03296020862420481},
    {-0.6605616460698792, 0.4263504857111389, 0.03296020862420481},
    {-0.562439537009791, 0.4263504857111389, 0.02850923302558555},
    {-0.484671573946297, 0.4263504857111389, 0.020209685752624707},
    {-0.4377403379774035, 0.4263504857111389, 0.009199511606982775},
    {-0.9942671952159429, 0.7112674859157089, 0.003612421838074282},
    {-0.9706455004130107, 0.7112674859157089, 0.007935846300578168},
    {-0.9315028899318134, 0.7112674859157089, 0.011194874289870182},
    {-0.8821155157068155, 0.7112674859157089, 0.012942662883449817},
    {-0.8291519702088934, 0.7112674859157089, 0.012942662883449817},
    {-0.7797645959838955, 0.7112674859157089, 0.011194874289870182},
    {-0.7406219855026981, 0.7112674859157089, 0.007935846300578168},
    {-0.717000290699766, 0.7112674859157089, 0.003612421838074282},
    {-0.9982275792303528, 0.9107320894200603, 0.0006671348129908288},
    {-0.9909244206439277, 0.9107320894200603, 0.001465576163298377},
    {-0.9788226347976657, 0.9107320894200603, 0.002067446909746759},
    {-0.9635534583418126, 0.9107320894200603, 0.0023902249984615676},
    {-0.9471786310782477, 0.9107320894200603, 0.0023902249984615676},
    {-0.9319094546223946, 0.9107320894200603, 0.002067446909746759},
    {-0.9198076687761326, 0.9107320894200603, 0.001465576163298377},
    {-0.9125045101897076, 0.9107320894200603, 0.0006671348129908288},
}};

inline constexpr std::array<std::array<double, 3>, 81> tri_rule_deg16 = {{
    {-0.9686191271789643, -0.9711751807022471, 0.005896945094666998},
    {-0.838394294177517, -0.9711751807022471, 0.013107109220323682},
    {-0.6189436819944676, -0.9711751807022471, 0.01890887152461956},
    {-0.33399255988453913, -0.9711751807022471, 0.022662656722685977},
    {-0.014412409648876467, -0.9711751807022471, 0.02396084896852189},
    {0.3051677405867863, -0.9711751807022471, 0.022662656722685977},
    {0.5901188626967147, -0.9711751807022471, 0.01890887152461956},
    {0.8095694748797639, -0.9711751807022471, 0.013107109220323682},
    {0.9397943078812114, -0.9711751807022471, 0.005896945094666998},
    {-0.9705287161796198, -0.8512252205816078, 0.012365777108142822},
    {-0.8482283252461147, -0.8512252205816078, 0.027485348523455935},
    {-0.6421317226089998, -0.8512252205816078, 0.03965152920474297},
    {-0.37452044734172496, -0.8512252205816078, 0.04752314244277606},
    {-0.07438738970919612, -0.8512252205816078, 0.05024542587899869},
    {0.22574566792333273, -0.8512252205816078, 0.04752314244277606},
    {0.4933569431906075, -0.8512252205816078, 0.03965152920474297},
    {0.6994535458277225, -0.8512252205816078, 0.027485348523455935},
    {0.8217539367612274, -0.8512252205816078, 0.012365777108142822},
    {-0.9737677516585737, -0.6477666876740094, 0.016016539256068926},
    {-0.8649087604190178, -0.6477666876740094, 0.03559987857963125},
    {-0.681463163150452, -0.6477666876740094, 0.05135789433344476},
    {-0.4432636508875215, -0.6477666876740094, 0.06155345271469104},
    {-0.17611665616299532, -0.6477666876740094, 0.0650794389217119},
    {0.09103033856153098, -0.6477666876740094, 0.06155345271469104},
    {0.3292298508244613, -0.6477666876740094, 0.05135789433344476},
    {0.5126754480930271, -0.6477666876740094, 0.03559987857963125},
    {0.621534439332583, -0.6477666876740094, 0.016016539256068926},
    {-0.9780199810847752, -0.3806648401447244, 0.016305074228937736},
    {-0.886806957504211, -0.3806648401447244, 0.03624120376454688},
    {-0.7330977654670884, -0.3806648401447244, 0.05228309723846588},
    {-0.5335102304227375, -0.3806648401447244, 0.062662326705824},
    {-0.3096675799276378, -0.3806648401447244, 0.06625183289792486},
    {-0.08582492943253806, -0.3806648401447244, 0.062662326705824},
    {0.11376260561181284, -0.3806648401447244, 0.05228309723846588},
    {0.26747179764893536, -0.3806648401447244, 0.03624120376454688},
    {0.3586848212294995, -0.3806648401447244, 0.016305074228937736},
    {-0.9828692664326114, -0.07605919783797811, 0.013712342022309466},
    {-0.911779882439759, -0.07605919783797811, 0.03047835136117943},
    {-0.7919823870052752, -0.07605919783797811, 0.0439693620067754},
    {-0.6364283404230714, -0.07605919783797811, 0.052698150504521465},
    {-0.46197040108101095, -0.07605919783797811, 0.05571687559011044},
    {-0.2875124617389504, -0.07605919783797811, 0.052698150504521465},
    {-0.13195841515674667, -0.07605919783797811, 0.0439693620067754},
    {-0.012160919722262853, -0.07605919783797811, 0.03047835136117943},
    {0.0589284642705894, -0.07605919783797811, 0.013712342022309466},
    {-0.9878409442165327, 0.23623446939058804, 0.009493042854398795},
    {-0.9373831058419451, 0.23623446939058804, 0.02110013702490555},
    {-0.8523532135739048, 0.23623446939058804, 0.03043995235327372},
    {-0.7419440286842582, 0.23623446939058804, 0.036482885292174465},
    {-0.618117234695294, 0.23623446939058804, 0.038572746131155945},
    {-0.49429044070632977, 0.23623446939058804, 0.036482885292174465},
    {-0.3838812558166832, 0.23623446939058804, 0.03043995235327372},
    {-0.29885136354864283, 0.23623446939058804, 0.02110013702490555},
    {-0.24839352517405533, 0.23623446939058804, 0.009493042854398795},
    {-0.9924483416091883, 0.5256460303700793, 0.005169834827268932},
    {-0.9611103524322836, 0.5256460303700793, 0.011490965007174383},
    {-0.9083006021645981, 0.5256460303700793, 0.016577353355509288},
    {-0.8397284644638837, 0.5256460303700793, 0.01986828605701959},
    {-0.7628230151850397, 0.5256460303700793, 0.021006407470271778},
    {-0.6859175659061956, 0.5256460303700793, 0.01986828605701959},
    {-0.6173454282054813, 0.5256460303700793, 0.016577353355509288},
    {-0.5645356779377957, 0.5256460303700793, 0.011490965007174383},
    {-0.533197688760891, 0.5256460303700793, 0.005169834827268932},
    {-0.9962403935961424, 0.7638420424200026, 0.001960338943767793},
    {-0.9806387205998023, 0.7638420424200026, 0.004357235184037167},
    {-0.9543472936022455, 0.7638420424200026, 0.006285932230560616},
    {-0.9202085343146842, 0.7638420424200026, 0.0075338141748852545},
    {-0.8819210212100013, 0.7638420424200026, 0.007965376072639913},
    {-0.8436335081053185, 0.7638420424200026, 0.0075338141748852545},
    {-0.8094947488177572, 0.7638420424200026, 0.006285932230560616},
    {-0.7832033218202004, 0.7638420424200026, 0.004357235184037167},
    {-0.7676016488238603, 0.7638420424200026, 0.001960338943767793},
    {-0.9988455599218213, 0.9274843742335811, 0.0003544940260126654},
    {-0.9940548465707821, 0.9274843742335811, 0.0007879320296033132},
    {-0.9859816937515546, 0.9274843742335811, 0.0011367041555432964},
    {-0.975498907069306, 0.9274843742335811, 0.0013623624254248917},
    {-0.9637421871167906, 0.9274843742335811, 0.0014404030699241915},
    {-0.9519854671642751, 0.9274843742335811, 0.0013623624254248917},
    {-0.9415026804820265, 0.9274843742335811, 0.0011367041555432964},
    {-0.933429527662799, 0.9274843742335811, 0.0007879320296033132},
    {-0.9286388143117598, 0.9274843742335811, 0.0003544940260126654},
}};

struct TriRuleView {
    int degree;
    const std::array<double, 3>* data;
    std::size_t size;
};

inline constexpr std::array<TriRuleView, 16> tri_rules = {{
    {1, tri_rule_deg1.data(), tri_rule_deg1.size()},
    {2, tri_rule_deg2.data(), tri_rule_deg2.size()},
    {3, tri_rule_deg3.data(), tri_rule_deg3.size()},
    {4, tri_rule_deg4.data(), tri_rule_deg4.size()},
    {5, tri_rule_deg5.data(), tri_rule_deg5.size()},
    {6, tri_rule_deg6.data(), tri_rule_deg6.size()},
    {7, tri_rule_deg7.data(), tri_rule_deg7.size()},
    {8, tri_rule_deg8.data(), tri_rule_deg8.size()},
    {9, tri_rule_deg9.data(), tri_rule_deg9.size()},
    {10, tri_rule_deg10.data(), tri_rule_deg10.size()},
    {11, tri_rule_deg11.data(), tri_rule_deg11.size()},
    {12, tri_rule_deg12.data(), tri_rule_deg12.size()},
    {13, tri_rule_deg13.data(), tri_rule_deg13.size()},
    {14, tri_rule_deg14.data(), tri_rule_deg14.size()},
    {15, tri_rule_deg15.data(), tri_rule_deg15.size()},
    {16, tri_rule_deg16.data(), tri_rule_deg16.size()},
}};

}  // namespace swedg::tables
