#pragma once

// Published exact values, written in the PiExpr string syntax.
// Index: n (or d) -> entries k = 1..n (J tables) or k = 0..d-1 (f-vectors).

#include <map>
#include <string>
#include <vector>

namespace reference {

inline const std::map<int, std::vector<std::string>> kJMinusOne = {
    {4,
     {
         "1/8",
         "9/8",
         "2",
         "1",
     }},
    {5,
     {
         "-1/6 + 539/288 * pi^-2",
         "539/96 * pi^-2",
         "5/3 + 539/144 * pi^-2",
         "5/2",
         "1",
     }},
    {6,
     {
         "25411/7340032",
         "233445/1048576",
         "5155/3584",
         "23075/7168",
         "3",
         "1",
     }},
    {7,
     {
         "1/6 - 2144238917/1141620480 * pi^-2 + 113537407/48384000 * pi^-4",
         "113537407/16128000 * pi^-4",
         "-7/6 + 2144238917/114162048 * pi^-2 + 113537407/24192000 * pi^-4",
         "2144238917/76108032 * pi^-2",
         "7/2 + 2144238917/190270080 * pi^-2",
         "7/2",
         "1",
     }},
    {8,
     {
         "76136856565967/1454662679640670208",
         "29503701837953231/1454662679640670208",
         "5899486844923/16647293239296",
         "1146031403475/584115552256",
         "418431615/84672512",
         "1603846783/254017536",
         "4",
         "1",
     }},
    {9,
     {
         "-3/10 + 3585828150520517221/975094112225376000 * pi^-2 - 1581133359667623075371927/218521780048552780800000 * pi^-4 + 2819369438967901759/1739761680384000000 * pi^-6",
         "2819369438967901759/579920560128000000 * pi^-6",
         "2 - 25100797053643620547/975094112225376000 * pi^-2 + 1581133359667623075371927/21852178004855278080000 * pi^-4 + 2819369438967901759/869880840192000000 * pi^-6",
         "1581133359667623075371927/14568118669903518720000 * pi^-4",
         "-21/5 + 25100797053643620547/325031370741792000 * pi^-2 + 1581133359667623075371927/36420296674758796800000 * pi^-4",
         "25100797053643620547/325031370741792000 * pi^-2",
         "6 + 3585828150520517221/162515685370896000 * pi^-2",
         "9/2",
         "1",
     }},
    {10,
     {
         "7142769685117513413611137831/13319284084760520585863454122835968",
         "15207860904181118336356297648935/13319284084760520585863454122835968",
         "9440668036340000013447895/198472799133666166452518912",
         "240195630998707566620445/441541266148311827480576",
         "65392213852270069737/23659801379879256064",
         "177147685252097540771/23659801379879256064",
         "8199101438535/705117028352",
         "29352612289095/2820468113408",
         "5",
         "1",
     }},
};

inline const std::map<int, std::vector<std::string>> kJZero = {
    {4,
     {
         "401/2560",
         "2961/2560",
         "2",
         "1",
     }},
    {5,
     {
         "-1/6 + 1692197/846720 * pi^-2",
         "1692197/282240 * pi^-2",
         "5/3 + 1692197/423360 * pi^-2",
         "5/2",
         "1",
     }},
    {6,
     {
         "112433094897/17197049053184",
         "29573170815/120259084288",
         "6929155/4685824",
         "30358275/9371648",
         "3",
         "1",
     }},
    {7,
     {
         "1/6 - 621038966291119/325969178895360 * pi^-2 + 36051577693123/13519341158400 * pi^-4",
         "36051577693123/4506447052800 * pi^-4",
         "-7/6 + 621038966291119/32596917889536 * pi^-2 + 36051577693123/6759670579200 * pi^-4",
         "621038966291119/21731278593024 * pi^-2",
         "7/2 + 621038966291119/54328196482560 * pi^-2",
         "7/2",
         "1",
     }},
    {8,
     {
         "54854407266470750437/407304109147506899681280",
         "1922620195704749849441/81460821829501379936256",
         "1818739186251799/4855443348258816",
         "6494630010305885/3236962232172544",
         "2403490929/482344960",
         "9156320369/1447034880",
         "4",
         "1",
     }},
    {9,
     {
         "-3/10 + 25695566187355249503645020401/6950795362764910977640320000 * pi^-2 - 3825746278401786849105853842941927/513083615323402301904101376000000 * pi^-4 + 834997968128824111294853689/434049888937072472064000000 * pi^-6",
         "834997968128824111294853689/144683296312357490688000000 * pi^-6",
         "2 - 25695566187355249503645020401/992970766109272996805760000 * pi^-2 + 3825746278401786849105853842941927/51308361532340230190410137600000 * pi^-4 + 834997968128824111294853689/217024944468536236032000000 * pi^-6",
         "3825746278401786849105853842941927/34205574354893486793606758400000 * pi^-4",
         "-21/5 + 25695566187355249503645020401/330990255369757665601920000 * pi^-2 + 3825746278401786849105853842941927/85513935887233716984016896000000 * pi^-4",
         "25695566187355249503645020401/330990255369757665601920000 * pi^-2",
         "6 + 25695566187355249503645020401/1158465893794151829606720000 * pi^-2",
         "9/2",
         "1",
     }},
    {10,
     {
         "16173937433865922950599394579005791588389155/9204102262874833628227344732391414668379518140416",
         "12688011280876667528205329700413092651546251555/9204102262874833628227344732391414668379518140416",
         "32929953220484140728052018125551175/640848401352029148689993712621584384",
         "210765193340397846616524118474155/373323101767213558740779093983232",
         "371193086109705273947602629/131859245100259540744536064",
         "2253773101928857034270262735/298418291542692644842897408",
         "15529150935155595/1330783805505536",
         "55452665100321675/5323135222022144",
         "5",
         "1",
     }},
};

inline const std::map<int, std::vector<std::string>> kVoronoi = {
    {2,
     {
         "6",
         "6",
     }},
    {3,
     {
         "96/35 * pi^2",
         "144/35 * pi^2",
         "2 + 48/35 * pi^2",
     }},
    {4,
     {
         "1430/9",
         "2860/9",
         "590/3",
         "340/9",
     }},
    {5,
     {
         "7776000/676039 * pi^4",
         "19440000/676039 * pi^4",
         "12960000/676039 * pi^4 + 2716500/49049 * pi^2",
         "4074750/49049 * pi^2",
         "-1296000/676039 * pi^4 + 1358250/49049 * pi^2 + 2",
     }},
    {6,
     {
         "90751353/10000",
         "272254059/10000",
         "120613311/4000",
         "14930979/1000",
         "62611437/20000",
         "4053/20",
     }},
    {7,
     {
         "27536588800000/322476036831 * pi^6",
         "96378060800000/322476036831 * pi^6",
         "96378060800000/322476036831 * pi^6 + 145800103122713984000/139352342399730603 * pi^4",
         "364500257806784960000/139352342399730603 * pi^4",
         "-96378060800000/967428110493 * pi^6 + 729000515613569920000/418057027199191809 * pi^4 + 1088840823954800/1430074210851 * pi^2",
         "544420411977400/476691403617 * pi^2",
         "13768294400000/967428110493 * pi^6 - 72900051561356992000/418057027199191809 * pi^4 + 544420411977400/1430074210851 * pi^2 + 2",
     }},
    {8,
     {
         "37400492672297766/45956640625",
         "149601970689191064/45956640625",
         "6850391092580412/1313046875",
         "27954881044110648/6565234375",
         "17044839181035378/9191328125",
         "18843745433119128/45956640625",
         "5212716470964/133984375",
         "4422456/4375",
     }},
    {9,
     {
         "100837904362675200000000/109701233401363445369 * pi^8",
         "453770569632038400000000/109701233401363445369 * pi^8",
         "605027426176051200000000/109701233401363445369 * pi^8 + 2852955835216853216138612837266320000/134952926502386519274273464063983 * pi^6",
         "9985345423258986256485144930432120000/134952926502386519274273464063983 * pi^6",
         "-423519198323235840000000/109701233401363445369 * pi^8 + 9985345423258986256485144930432120000/134952926502386519274273464063983 * pi^6 + 16352535012213243758810504565072375/326981148443273530305985029716 * pi^4",
         "81762675061066218794052522825361875/653962296886547060611970059432 * pi^4",
         "201675808725350400000000/109701233401363445369 * pi^8 - 3328448474419662085495048310144040000/134952926502386519274273464063983 * pi^6 + 27254225020355406264684174275120625/326981148443273530305985029716 * pi^4 + 19758536784497995373925/2249321131934361056 * pi^2",
         "59275610353493986121775/4498642263868722112 * pi^2",
         "-30251371308802560000000/109701233401363445369 * pi^8 + 475492639202808869356435472877720000/134952926502386519274273464063983 * pi^6 - 5450845004071081252936834855024125/653962296886547060611970059432 * pi^4 + 19758536784497995373925/4498642263868722112 * pi^2 + 2",
     }},
    {10,
     {
         "155696519360438569961130397/1556433053837891712",
         "778482596802192849805651985/1556433053837891712",
         "363290492786125188681583835/345874011963975936",
         "4865451274315354941235930/4053211077702843",
         "89845553163656455297282315/111173789559849408",
         "23998744131568764316595507/74115859706566272",
         "32972345885500895805463345/444695158239397632",
         "377982052291467600549815/43234251495496992",
         "5889025850448565/13894111602",
         "402700265/83349",
     }},
};

inline const std::map<int, std::vector<std::string>> kBallVec = {
    {1,
     {
         "1",
     }},
    {2,
     {
         "1",
         "1",
     }},
    {3,
     {
         "1/2",
         "3/2",
         "1",
     }},
    {4,
     {
         "26741/16800 * pi^-2",
         "1 + 26741/16800 * pi^-2",
         "2",
         "1",
     }},
    {5,
     {
         "2000/52003",
         "64003/104006",
         "108006/52003",
         "5/2",
         "1",
     }},
    {6,
     {
         "1758847651/2458624000 * pi^-4",
         "-1/2 + 108130927981/14717390688 * pi^-2 + 1758847651/2458624000 * pi^-4",
         "108130927981/7358695344 * pi^-2",
         "5/2 + 108130927981/14717390688 * pi^-2",
         "3",
         "1",
     }},
    {7,
     {
         "52521875/44479453356",
         "1260026621/14826484452",
         "708362065/855374103",
         "115870255/39856141",
         "371689191/79712282",
         "7/2",
         "1",
     }},
    {8,
     {
         "90856752400884977/571643448768000000 * pi^-6",
         "2/3 - 486245776939428578826199/59171148465116379120000 * pi^-2 + 3883880966311229933975003293/209349006975455882895360000 * pi^-4 + 90856752400884977/571643448768000000 * pi^-6",
         "3883880966311229933975003293/104674503487727941447680000 * pi^-4",
         "-7/3 + 486245776939428578826199/11834229693023275824000 * pi^-2 + 3883880966311229933975003293/209349006975455882895360000 * pi^-4",
         "486245776939428578826199/9861858077519396520000 * pi^-2",
         "14/3 + 486245776939428578826199/29585574232558189560000 * pi^-2",
         "4",
         "1",
     }},
    {9,
     {
         "12004512424128/581660834577748915",
         "3683565096070608/581660834577748915",
         "17538430231527552/116332166915549783",
         "570366050377039/491890769198942",
         "1019018617306221/245945384599471",
         "1080810073/137168095",
         "1131811448/137168095",
         "9/2",
         "1",
     }},
    {10,
     {
         "549837358580569775037558395/24790385031737592753218912256 * pi^-8",
         "-3/2 + 37401610118391599618484796905719320020269/1946114861053154102938714818796281216000 * pi^-2 - 301974317327871030169614455148390753674792595873047/6565687677840932855885309667960898754371584000000 * pi^-4 + 296364869518522313138595119776890880847603113/11688440195468832553173084766502230425600000 * pi^-6 + 549837358580569775037558395/24790385031737592753218912256 * pi^-8",
         "296364869518522313138595119776890880847603113/5844220097734416276586542383251115212800000 * pi^-6",
         "5 - 37401610118391599618484796905719320020269/556032817443758315125347091084651776000 * pi^-2 + 301974317327871030169614455148390753674792595873047/1313137535568186571177061933592179750874316800000 * pi^-4 + 296364869518522313138595119776890880847603113/11688440195468832553173084766502230425600000 * pi^-6",
         "301974317327871030169614455148390753674792595873047/1094281279640155475980884944660149792395264000000 * pi^-4",
         "-7 + 37401610118391599618484796905719320020269/278016408721879157562673545542325888000 * pi^-2 + 301974317327871030169614455148390753674792595873047/3282843838920466427942654833980449377185792000000 * pi^-4",
         "37401610118391599618484796905719320020269/324352476842192350489785803132713536000 * pi^-2",
         "15/2 + 37401610118391599618484796905719320020269/1297409907368769401959143212530854144000 * pi^-2",
         "5",
         "1",
     }},
};

inline const std::map<int, std::vector<std::string>> kSphere = {
    {2,
     {
         "1",
         "1",
     }},
    {3,
     {
         "1",
         "3",
         "2",
     }},
    {4,
     {
         "1",
         "24/35 * pi^2 + 1",
         "48/35 * pi^2",
         "24/35 * pi^2",
     }},
    {5,
     {
         "1",
         "170/9",
         "590/9",
         "715/9",
         "286/9",
     }},
    {6,
     {
         "1",
         "-648000/676039 * pi^4 + 679125/49049 * pi^2 + 1",
         "1358250/49049 * pi^2",
         "3240000/676039 * pi^4 + 679125/49049 * pi^2",
         "3888000/676039 * pi^4",
         "1296000/676039 * pi^4",
     }},
    {7,
     {
         "1",
         "4053/40",
         "20870479/20000",
         "14930979/4000",
         "120613311/20000",
         "90751353/20000",
         "12964479/10000",
     }},
    {8,
     {
         "1",
         "6884147200000/967428110493 * pi^6 - 36450025780678496000/418057027199191809 * pi^4 + 272210205988700/1430074210851 * pi^2 + 1",
         "544420411977400/1430074210851 * pi^2",
         "-24094515200000/967428110493 * pi^6 + 182250128903392480000/418057027199191809 * pi^4 + 272210205988700/1430074210851 * pi^2",
         "72900051561356992000/139352342399730603 * pi^4",
         "48189030400000/967428110493 * pi^6 + 72900051561356992000/418057027199191809 * pi^4",
         "13768294400000/322476036831 * pi^6",
         "3442073600000/322476036831 * pi^6",
     }},
    {9,
     {
         "1",
         "2211228/4375",
         "1737572156988/133984375",
         "4710936358279782/45956640625",
         "17044839181035378/45956640625",
         "4659146840685108/6565234375",
         "6850391092580412/9191328125",
         "18700246336148883/45956640625",
         "4155610296921974/45956640625",
     }},
    {10,
     {
         "1",
         "-15125685654401280000000/109701233401363445369 * pi^8 + 237746319601404434678217736438860000/134952926502386519274273464063983 * pi^6 - 5450845004071081252936834855024125/1307924593773094121223940118864 * pi^4 + 19758536784497995373925/8997284527737444224 * pi^2 + 1",
         "19758536784497995373925/4498642263868722112 * pi^2",
         "50418952181337600000000/109701233401363445369 * pi^8 - 832112118604915521373762077536010000/134952926502386519274273464063983 * pi^6 + 27254225020355406264684174275120625/1307924593773094121223940118864 * pi^4 + 19758536784497995373925/8997284527737444224 * pi^2",
         "16352535012213243758810504565072375/653962296886547060611970059432 * pi^4",
         "-70586533053872640000000/109701233401363445369 * pi^8 + 1664224237209831042747524155072020000/134952926502386519274273464063983 * pi^6 + 5450845004071081252936834855024125/653962296886547060611970059432 * pi^4",
         "1426477917608426608069306418633160000/134952926502386519274273464063983 * pi^6",
         "75628428272006400000000/109701233401363445369 * pi^8 + 356619479402106652017326604658290000/134952926502386519274273464063983 * pi^6",
         "50418952181337600000000/109701233401363445369 * pi^8",
         "10083790436267520000000/109701233401363445369 * pi^8",
     }},
};

}  // namespace reference
